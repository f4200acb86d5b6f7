//! Littlewood–Richardson coefficients by direct enumeration of LR tableaux.

use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use crate::partition::Partition;
use crate::scalar::Multiplicity;

type Key = (Partition, Partition, Partition);

fn cache() -> &'static Mutex<HashMap<Key, u64>> {
    static CACHE: OnceLock<Mutex<HashMap<Key, u64>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// The Littlewood–Richardson coefficient `c^ν_{λμ}`: the multiplicity of
/// `P_ν` in `P_λ ∘ P_μ`.
///
/// Counts column-strict fillings of the skew shape `ν/λ` with content `μ`
/// whose reading word (right to left along rows, top to bottom) is a
/// lattice word.
pub fn lr_coefficient<T: Multiplicity>(lambda: &Partition, mu: &Partition, nu: &Partition) -> T {
    T::from_u64_exact(lr_count(lambda, mu, nu))
}

pub(crate) fn lr_count(lambda: &Partition, mu: &Partition, nu: &Partition) -> u64 {
    if nu.size() != lambda.size() + mu.size() || !nu.contains(lambda) || !nu.contains(mu) {
        return 0;
    }
    if mu.is_empty() || lambda.is_empty() {
        // the only tableau is the superstandard one, or ν must equal the other factor
        return u64::from(nu == lambda || nu == mu);
    }
    let key = (lambda.clone(), mu.clone(), nu.clone());
    if let Some(&hit) = cache().lock().expect("lr cache poisoned").get(&key) {
        return hit;
    }
    let value = Filler::new(lambda, mu, nu).count();
    // concurrent callers may both compute; both write the same value
    cache().lock().expect("lr cache poisoned").insert(key, value);
    value
}

struct Filler {
    /// `(start, end)` column range of each row of `ν/λ`.
    rows: Vec<(usize, usize)>,
    /// Entries by row and column; zero marks a cell of `λ`.
    grid: Vec<Vec<usize>>,
    content: Vec<usize>,
    used: Vec<usize>,
}

impl Filler {
    fn new(lambda: &Partition, mu: &Partition, nu: &Partition) -> Self {
        let rows: Vec<(usize, usize)> = (0..nu.length()).map(|r| (lambda.part(r), nu.part(r))).collect();
        let grid = rows.iter().map(|&(_, end)| vec![0; end]).collect();
        // content is 1-based; index 0 unused
        let mut content = vec![0];
        content.extend_from_slice(mu.parts());
        let used = vec![0; content.len()];
        Filler {
            rows,
            grid,
            content,
            used,
        }
    }

    fn count(&mut self) -> u64 {
        self.fill(0, None)
    }

    /// Fill row `r` from column `col` leftwards; `col = None` starts the row.
    fn fill(&mut self, r: usize, col: Option<usize>) -> u64 {
        if r == self.rows.len() {
            return 1;
        }
        let (start, end) = self.rows[r];
        let col = match col {
            Some(c) => c,
            None if end == start => return self.fill(r + 1, None),
            None => end - 1,
        };
        // weakly increasing along the row: the entry to the right bounds us above
        let max = if col + 1 < end { self.grid[r][col + 1] } else { self.content.len() - 1 };
        // strictly increasing down columns
        let min = if r > 0 && col < self.grid[r - 1].len() {
            self.grid[r - 1][col] + 1
        } else {
            1
        };
        let mut total = 0;
        for v in min..=max {
            if self.used[v] == self.content[v] {
                continue;
            }
            if v > 1 && self.used[v] + 1 > self.used[v - 1] {
                continue;
            }
            self.used[v] += 1;
            self.grid[r][col] = v;
            total += if col == start {
                self.fill(r + 1, None)
            } else {
                self.fill(r, Some(col - 1))
            };
            self.grid[r][col] = 0;
            self.used[v] -= 1;
        }
        total
    }
}
