//! Irreducible characters of `S_n` by the Murnaghan–Nakayama rule.

use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use crate::error::{Error, Result};
use crate::partition::Partition;

fn cache() -> &'static Mutex<HashMap<(Partition, Partition), i64>> {
    static CACHE: OnceLock<Mutex<HashMap<(Partition, Partition), i64>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// `χ^λ(μ)`: the character of `P_λ` on a permutation of cycle type `μ`.
pub fn mn_character(lambda: &Partition, cycle_type: &Partition) -> Result<i64> {
    if lambda.size() != cycle_type.size() {
        return Err(Error::DegreeMismatch {
            expected: lambda.size(),
            found: cycle_type.size(),
        });
    }
    Ok(character(lambda, cycle_type.parts()))
}

fn character(lambda: &Partition, cycles: &[usize]) -> i64 {
    let Some((&r, rest)) = cycles.split_first() else {
        return 1;
    };
    let key = (lambda.clone(), Partition::from_padded(cycles.to_vec()));
    if let Some(&hit) = cache().lock().expect("character cache poisoned").get(&key) {
        return hit;
    }
    let value = strip_rim_hooks(lambda, r)
        .into_iter()
        .map(|(smaller, sign)| sign * character(&smaller, rest))
        .sum();
    cache().lock().expect("character cache poisoned").insert(key, value);
    value
}

/// All ways to remove a rim hook of length `r`, with sign `(-1)^height`.
///
/// Works on the beta-set `{λᵢ + ℓ − 1 − i}`: removing an `r`-hook moves one
/// bead from `b` to `b − r`, and the height is the number of beads jumped.
fn strip_rim_hooks(lambda: &Partition, r: usize) -> Vec<(Partition, i64)> {
    let len = lambda.length();
    let beta: Vec<usize> = (0..len).map(|i| lambda.part(i) + len - 1 - i).collect();
    let mut out = Vec::new();
    for (idx, &b) in beta.iter().enumerate() {
        if b < r || beta.contains(&(b - r)) {
            continue;
        }
        let target = b - r;
        let jumped = beta.iter().filter(|&&x| x > target && x < b).count();
        let mut moved = beta.clone();
        moved[idx] = target;
        moved.sort_unstable_by(|a, b| b.cmp(a));
        let parts = moved.iter().enumerate().map(|(i, &x)| x - (len - 1 - i)).collect();
        let sign = if jumped % 2 == 0 { 1 } else { -1 };
        out.push((Partition::from_padded(parts), sign));
    }
    out
}

/// Sign of a permutation of the given cycle type.
pub fn cycle_type_sign(cycle_type: &Partition) -> i64 {
    let odd_moves: usize = cycle_type.parts().iter().map(|&c| c - 1).sum();
    if odd_moves.is_multiple_of(2) {
        1
    } else {
        -1
    }
}
