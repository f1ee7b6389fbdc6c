//! Exhaustive identity sweeps with violation reporting. A violation is
//! data, not an exception: every check runs to completion and reports
//! whatever it found, in a canonical order.

use rayon::prelude::*;

use crate::bott::{bott, BottResult};
use crate::complex::{eval_stable_specht, BiSymFunc};
use crate::modification::{mod_rule_closed_d1, mod_rule_recursive};
use crate::partition::{partitions_of, Partition};
use crate::symfunc::{h_series, mn_character, rat, Basis, CycleType, SymFunc, TruncatedSeries};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub case: String,
    pub detail: String,
}

#[derive(Clone, Debug)]
pub struct Report {
    pub label: String,
    pub cases: usize,
    pub violations: Vec<Violation>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    fn finish(label: String, cases: usize, mut violations: Vec<Violation>) -> Report {
        violations.sort_by(|a, b| a.case.cmp(&b.case).then_with(|| a.detail.cmp(&b.detail)));
        Report { label, cases, violations }
    }
}

impl std::fmt::Display for Report {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(
            f,
            "{}: {} cases checked, {} violation(s)",
            self.label,
            self.cases,
            self.violations.len()
        )?;
        for v in &self.violations {
            writeln!(f, "  {}: {}", v.case, v.detail)?;
        }
        Ok(())
    }
}

/// Evaluations of stable Specht polynomials against the signed character
/// side: for every λ with |λ| ≤ lambda_max, every n ≤ n_max, every ρ ⊢ n,
/// the value at ρ must equal (−1)^δ χ^{λ[n]}(ρ) when the Bott rule is
/// defined and 0 otherwise.
pub fn theorem61_check(lambda_max: usize, n_max: usize) -> Report {
    let shapes: Vec<Partition> = (0..=lambda_max).flat_map(partitions_of).collect();
    let pairs: Vec<(Partition, usize)> =
        shapes.iter().flat_map(|l| (0..=n_max).map(move |n| (l.clone(), n))).collect();
    let cases: usize = pairs.iter().map(|(_, n)| partitions_of(*n).count()).sum();
    let violations: Vec<Violation> = pairs
        .par_iter()
        .flat_map_iter(|(lam, n)| {
            let placement = bott(lam, *n as i64);
            let mut found = Vec::new();
            for class in partitions_of(*n) {
                let rho = CycleType::new(class);
                let actual = eval_stable_specht(lam, &rho);
                let expected = match &placement {
                    BottResult::Defined { result, delta } => {
                        let sign = if delta % 2 == 0 { 1 } else { -1 };
                        sign * mn_character(result, &rho)
                    }
                    BottResult::Undefined => 0,
                };
                if actual != expected {
                    found.push(Violation {
                        case: format!("lambda {lam}, n {n}, rho {rho}"),
                        detail: format!("stable value {actual}, character side {expected}"),
                    });
                }
            }
            found
        })
        .collect();
    Report::finish(
        format!("stable Specht evaluation (|lambda| <= {lambda_max}, n <= {n_max})"),
        cases,
        violations,
    )
}

/// Two-alphabet Euler characteristic for rank n, truncated to x-degree ≤
/// degree_bound: the alternating sum of the Koszul-style chain terms must
/// match the surviving homology terms coefficient-by-coefficient.
pub fn theorem41_euler_check(n: usize, degree_bound: usize) -> Report {
    let chain = chain_side(n, degree_bound);
    let homology = homology_side(n, degree_bound);
    let keys: std::collections::BTreeSet<(Partition, Partition)> =
        chain.terms().keys().chain(homology.terms().keys()).cloned().collect();
    let cases = keys.len();
    let mut violations = Vec::new();
    for (alpha, beta) in keys {
        let c = chain.coeff(&alpha, &beta);
        let h = homology.coeff(&alpha, &beta);
        if c != h {
            violations.push(Violation {
                case: format!("x {alpha}, y {beta}"),
                detail: format!("chain side {c}, homology side {h}"),
            });
        }
    }
    Report::finish(format!("Euler identity (n = {n}, degree <= {degree_bound})"), cases, violations)
}

/// Σ_{i} (−1)^i Σ_{μ⊢i} [s_μ(x)H(x)] ⊗ [s_{μ′}(y)h_{n−i}(y)], the
/// alternating sum over exterior powers of the mixed alphabet times the
/// ambient symmetric algebra, truncated in x.
fn chain_side(n: usize, degree_bound: usize) -> BiSymFunc {
    let h = h_series(degree_bound);
    let mut out = BiSymFunc::zero();
    for i in 0..=n.min(degree_bound) {
        let sign = if i % 2 == 0 { rat(1) } else { rat(-1) };
        let sym_rest = if n == i {
            SymFunc::one(Basis::Homogeneous)
        } else {
            SymFunc::complete(&Partition::of(&[n - i]))
        };
        for mu in partitions_of(i) {
            let x = TruncatedSeries::from_polynomial(&SymFunc::schur(&mu))
                .product(&h)
                .sum()
                .convert(Basis::Schur);
            let y = SymFunc::schur(&mu.conjugate()).multiply(&sym_rest);
            out.add_product(&x, &y, &sign);
        }
    }
    out
}

/// Σ over λ with |λ| ≤ degree_bound and a defined Bott image:
/// (−1)^{|λ|−δ} s_{λ′}(x) ⊗ s_{λ[n]}(y).
fn homology_side(n: usize, degree_bound: usize) -> BiSymFunc {
    let mut out = BiSymFunc::zero();
    for size in 0..=degree_bound {
        for lam in partitions_of(size) {
            if let BottResult::Defined { result, delta } = bott(&lam, n as i64) {
                let sign = if (size - delta) % 2 == 0 { rat(1) } else { rat(-1) };
                out.add_term(lam.conjugate(), result, sign);
            }
        }
    }
    out
}

/// The d = 1 closed form against the full recursion, on every pair with
/// |λ| ≤ lambda_max and |μ| ≤ mu_max. Compares the entire result:
/// finiteness, degree, and the terminal pair (hence the weight).
pub fn theorem34_check(lambda_max: usize, mu_max: usize) -> Report {
    let lambdas: Vec<Partition> = (0..=lambda_max).flat_map(partitions_of).collect();
    let mus: Vec<Partition> = (0..=mu_max).flat_map(partitions_of).collect();
    let cases = lambdas.len() * mus.len();
    let violations: Vec<Violation> = lambdas
        .par_iter()
        .flat_map_iter(|lam| {
            let mut found = Vec::new();
            for mu in &mus {
                let closed = mod_rule_closed_d1(lam, mu);
                let recursive = mod_rule_recursive(lam, mu, 1);
                if closed != recursive {
                    found.push(Violation {
                        case: format!("lambda {lam}, mu {mu}"),
                        detail: format!("closed form {closed}, recursion {recursive}"),
                    });
                }
            }
            found
        })
        .collect();
    Report::finish(
        format!("modification closed form (|lambda| <= {lambda_max}, |mu| <= {mu_max})"),
        cases,
        violations,
    )
}
