//! Independent oracles and the consistency suite behind `gammans selfcheck`.
//!
//! The oracles deliberately avoid the code paths they check: LR coefficients
//! are recomputed from Murnaghan–Nakayama characters, and dimensions from a
//! recursive count of standard tableaux.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use crate::assembly::{assembly_verdict, catalog, GluingPattern, VerdictOptions};
use crate::error::Result;
use crate::gamma::gamma_cohomology;
use crate::partition::Partition;
use crate::rep_ring::{lr_coefficient, mn_character};
use crate::scalar::factorial;
use crate::Module;

/// Number of standard Young tableaux of shape `λ`, by removing corners.
pub fn count_standard_tableaux(lambda: &Partition) -> u128 {
    fn count(lambda: &Partition, memo: &mut HashMap<Partition, u128>) -> u128 {
        if lambda.is_empty() {
            return 1;
        }
        if let Some(&known) = memo.get(lambda) {
            return known;
        }
        let total = lambda.remove_box().map(|smaller| count(&smaller, memo)).sum();
        memo.insert(lambda.clone(), total);
        total
    }
    count(lambda, &mut HashMap::new())
}

/// Size of the conjugacy class of `S_n` with the given cycle type.
pub fn class_size(cycle_type: &Partition) -> u128 {
    let mut counts: BTreeMap<usize, u32> = BTreeMap::new();
    for &part in cycle_type.parts() {
        *counts.entry(part).or_default() += 1;
    }
    let centralizer: u128 = counts
        .iter()
        .map(|(&len, &m)| (len as u128).pow(m) * factorial::<u128>(m as usize))
        .product();
    factorial::<u128>(cycle_type.size()) / centralizer
}

/// `c^ν_{λμ} = ⟨χ^λ × χ^μ, Res χ^ν⟩` over `S_a × S_b`.
pub fn lr_by_characters(lambda: &Partition, mu: &Partition, nu: &Partition) -> Result<i128> {
    let (a, b) = (lambda.size(), mu.size());
    if a + b != nu.size() {
        return Ok(0);
    }
    let mut total: i128 = 0;
    for alpha in Partition::all(a) {
        let chi_lambda = i128::from(mn_character(lambda, &alpha)?);
        if chi_lambda == 0 {
            continue;
        }
        for beta in Partition::all(b) {
            let mut joined: Vec<usize> = alpha.parts().iter().chain(beta.parts()).copied().collect();
            joined.sort_unstable_by(|x, y| y.cmp(x));
            let union = Partition::new(joined)?;
            let weight = (class_size(&alpha) * class_size(&beta)) as i128;
            total += weight
                * chi_lambda
                * i128::from(mn_character(mu, &beta)?)
                * i128::from(mn_character(nu, &union)?);
        }
    }
    Ok(total / (factorial::<u128>(a) * factorial::<u128>(b)) as i128)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckResult {
    pub name: &'static str,
    pub cases: usize,
    pub failures: Vec<String>,
}

impl CheckResult {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

impl fmt::Display for CheckResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed() { "pass" } else { "FAIL" };
        write!(f, "{status}  {} ({} cases)", self.name, self.cases)?;
        for failure in self.failures.iter().take(5) {
            write!(f, "\n      {failure}")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct SelfCheckReport {
    pub checks: Vec<CheckResult>,
}

impl SelfCheckReport {
    pub fn passed(&self) -> usize {
        self.checks.iter().filter(|c| c.passed()).count()
    }

    pub fn failed(&self) -> usize {
        self.checks.len() - self.passed()
    }
}

impl fmt::Display for SelfCheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for check in &self.checks {
            writeln!(f, "{check}")?;
        }
        write!(f, "passed {} failed {}", self.passed(), self.failed())
    }
}

struct Check {
    result: CheckResult,
}

impl Check {
    fn new(name: &'static str) -> Self {
        Self {
            result: CheckResult {
                name,
                cases: 0,
                failures: Vec::new(),
            },
        }
    }

    fn case(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.result.cases += 1;
        if !ok {
            self.result.failures.push(describe());
        }
    }
}

/// Pairs `(λ, μ)` with `|λ| + |μ| ≤ max_total`, each with every `ν ⊢ |λ|+|μ|`.
pub fn lr_triples(max_total: usize) -> Vec<(Partition, Partition, Partition)> {
    let mut out = Vec::new();
    for total in 0..=max_total {
        let targets = Partition::all(total);
        for a in 0..=total {
            for lambda in Partition::all(a) {
                for mu in Partition::all(total - a) {
                    for nu in &targets {
                        out.push((lambda.clone(), mu.clone(), nu.clone()));
                    }
                }
            }
        }
    }
    out
}

fn lr_oracle(max_total: usize) -> CheckResult {
    let mut check = Check::new("LR coefficients agree with character inner products");
    for (lambda, mu, nu) in lr_triples(max_total) {
        let fast: u64 = lr_coefficient(&lambda, &mu, &nu);
        let oracle = lr_by_characters(&lambda, &mu, &nu);
        check.case(oracle.as_ref().is_ok_and(|&o| o == i128::from(fast)), || {
            format!("c({lambda},{mu};{nu}) = {fast}, oracle {oracle:?}")
        });
    }
    check.result
}

fn lr_symmetries(max_total: usize) -> CheckResult {
    let mut check = Check::new("LR coefficients are symmetric and transpose-invariant");
    for (lambda, mu, nu) in lr_triples(max_total) {
        let c: u64 = lr_coefficient(&lambda, &mu, &nu);
        let swapped: u64 = lr_coefficient(&mu, &lambda, &nu);
        let transposed: u64 = lr_coefficient(&lambda.transpose(), &mu.transpose(), &nu.transpose());
        check.case(c == swapped && c == transposed, || format!("c({lambda},{mu};{nu})"));
    }
    check.result
}

fn dimensions(max_n: usize) -> CheckResult {
    let mut check = Check::new("hook lengths match tableau counts and sum of squares is n!");
    for n in 0..=max_n {
        let mut squares: u128 = 0;
        for lambda in Partition::all(n) {
            let hook: u128 = lambda.dim_irreducible();
            let counted = count_standard_tableaux(&lambda);
            check.case(hook == counted, || format!("dim {lambda}: {hook} vs {counted}"));
            squares += hook * hook;
        }
        check.case(squares == factorial::<u128>(n), || format!("sum of squares for n = {n}"));
    }
    check.result
}

fn character_orthogonality(max_n: usize) -> CheckResult {
    let mut check = Check::new("irreducible characters are orthonormal");
    for n in 0..=max_n {
        let shapes = Partition::all(n);
        for (i, lambda) in shapes.iter().enumerate() {
            for mu in &shapes[i..] {
                let mut inner: i128 = 0;
                let mut ok = true;
                for class in &shapes {
                    match (mn_character(lambda, class), mn_character(mu, class)) {
                        (Ok(x), Ok(y)) => inner += class_size(class) as i128 * i128::from(x) * i128::from(y),
                        _ => ok = false,
                    }
                }
                let expected = if lambda == mu { factorial::<u128>(n) as i128 } else { 0 };
                check.case(ok && inner == expected, || format!("<{lambda},{mu}> = {inner}"));
            }
        }
    }
    check.result
}

fn aut_out(max_k: usize) -> CheckResult {
    let mut check = Check::new("rank-two cohomology restricts from Aut to Out");
    for k in 0..=max_k {
        let out: Result<Module> = gamma_cohomology(2, 0, k);
        let aut: Result<Module> = gamma_cohomology(2, 1, k);
        let ok = match (&out, &aut) {
            (Ok(out), Ok(aut)) => aut.restrict(0).as_ref() == Ok(out),
            _ => false,
        };
        check.case(ok, || format!("degree {k}"));
    }
    check.result
}

fn stability(max_s: usize) -> CheckResult {
    let mut check = Check::new("modules stabilize by padding the first row");
    for n in 1..=2 {
        for i in 0..=8 {
            for s in 3 * i..max_s {
                let here: Result<Module> = gamma_cohomology(n, s, i);
                let next: Result<Module> = gamma_cohomology(n, s + 1, i);
                let ok = match (here, next) {
                    (Ok(here), Ok(next)) => here.pad_first_row() == next,
                    _ => false,
                };
                check.case(ok, || format!("n = {n}, s = {s}, i = {i}"));
            }
        }
    }
    check.result
}

fn verdicts(zero_expected: bool) -> CheckResult {
    let (name, patterns): (&'static str, Vec<(String, GluingPattern)>) = if zero_expected {
        let mut v: Vec<(String, GluingPattern)> = (1..=3).map(|k| (format!("gamma_{k}"), catalog::mss_gamma(k))).collect();
        for s in 5..=12 {
            v.push((format!("self-gluing s = {s}"), catalog::self_gluing(s, 4)));
        }
        v.push(("valences 3,5".into(), catalog::morita_three_five()));
        ("known vanishing patterns are forced to zero", v)
    } else {
        let mut v: Vec<(String, GluingPattern)> = (1..=3).map(|k| (format!("mu_{k}"), catalog::morita(k))).collect();
        v.push(("alpha_1 alpha_1".into(), catalog::rank_one_pair(1, 1)));
        v.extend((1..=2).map(|k| (format!("eisenstein_{k}"), catalog::eisenstein(k))));
        ("nonvanishing patterns are never forced to zero", v)
    };
    let mut check = Check::new(name);
    for (label, pattern) in patterns {
        let verdict = assembly_verdict(&pattern, VerdictOptions::default());
        let ok = verdict.as_ref().is_ok_and(|v| v.is_forced_zero() == zero_expected);
        check.case(ok, || label);
    }
    check.result
}

/// Runs every check at sizes small enough to finish in about a second.
pub fn run() -> SelfCheckReport {
    SelfCheckReport {
        checks: vec![
            lr_oracle(8),
            lr_symmetries(8),
            dimensions(12),
            character_orthogonality(8),
            aut_out(12),
            stability(14),
            verdicts(true),
            verdicts(false),
        ],
    }
}
