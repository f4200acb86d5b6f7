use std::fmt::{Debug, Display};

use num_traits::{FromPrimitive, Num, ToPrimitive};

/// Scalar used for multiplicities and dimensions.
///
/// Any unsigned integer type with exact arithmetic qualifies: `u64`, `u128`,
/// or [`BigNat`](crate::BigNat). Machine types will overflow for large
/// induced modules; the crate-root aliases use arbitrary precision.
pub trait Multiplicity:
    Num + Clone + Ord + Debug + Display + FromPrimitive + ToPrimitive + Send + Sync + 'static
{
    fn from_usize_exact(n: usize) -> Self {
        Self::from_usize(n).expect("value does not fit the multiplicity type")
    }

    fn from_u64_exact(n: u64) -> Self {
        Self::from_u64(n).expect("value does not fit the multiplicity type")
    }
}

impl<T> Multiplicity for T where
    T: Num + Clone + Ord + Debug + Display + FromPrimitive + ToPrimitive + Send + Sync + 'static
{
}

/// `n!` in the scalar type.
pub fn factorial<T: Multiplicity>(n: usize) -> T {
    (1..=n).fold(T::one(), |acc, k| acc * T::from_usize_exact(k))
}

/// Binomial coefficient, zero when `k > n`.
pub fn binomial<T: Multiplicity>(n: usize, k: usize) -> T {
    if k > n {
        return T::zero();
    }
    let k = k.min(n - k);
    let mut acc = T::one();
    for j in 0..k {
        // acc * (n - j) is divisible by (j + 1) at every step
        acc = acc * T::from_usize_exact(n - j) / T::from_usize_exact(j + 1);
    }
    acc
}
