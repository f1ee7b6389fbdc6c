//! Exact symmetric functions over the rationals: the five classical bases
//! with conversions, products, the Hall inner product, plethysm, characters
//! of symmetric groups, the series L and H, and evaluation at the
//! eigenvalues of permutation matrices.
//!
//! Coefficients are arbitrary-precision rationals throughout. Contracts
//! that promise integers are asserted at the point of use, never assumed.

mod transition;

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::partition::Partition;

pub use transition::{char_table, z_of, CharTable, Rat, Terms};

pub(crate) use transition::{
    add_scaled, add_term, lr_product, p_terms_to_schur, schur_in_p, term_product,
    term_product_truncated,
};

/// Snapshot/install entry points for the on-disk cache layer.
pub(crate) mod cache_hooks {
    pub(crate) use super::transition::{
        install_char_table, install_monomial_tables, snapshot_char_tables, snapshot_monomial_tables,
    };
}

/// Convenience constructor for integer rationals.
pub fn rat(n: i64) -> Rat {
    transition::rat(n)
}

// ────────────────────────────────────────────────────────────────────
// Bases
// ────────────────────────────────────────────────────────────────────

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Basis {
    Monomial,
    Elementary,
    Homogeneous,
    PowerSum,
    Schur,
}

impl Basis {
    pub const ALL: [Basis; 5] =
        [Basis::Monomial, Basis::Elementary, Basis::Homogeneous, Basis::PowerSum, Basis::Schur];

    pub fn letter(self) -> char {
        match self {
            Basis::Monomial => 'm',
            Basis::Elementary => 'e',
            Basis::Homogeneous => 'h',
            Basis::PowerSum => 'p',
            Basis::Schur => 's',
        }
    }

    pub fn from_letter(c: char) -> Option<Basis> {
        match c {
            'm' => Some(Basis::Monomial),
            'e' => Some(Basis::Elementary),
            'h' => Some(Basis::Homogeneous),
            'p' => Some(Basis::PowerSum),
            's' => Some(Basis::Schur),
            _ => None,
        }
    }

    /// Bases in which the index of a product is the multiset union of the
    /// factor indices.
    fn is_multiplicative(self) -> bool {
        matches!(self, Basis::Elementary | Basis::Homogeneous | Basis::PowerSum)
    }
}

impl fmt::Display for Basis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.letter())
    }
}

impl FromStr for Basis {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut chars = s.chars();
        match (chars.next(), chars.next()) {
            (Some(c), None) => Basis::from_letter(c).ok_or_else(|| format!("unknown basis {s:?}")),
            _ => Err(format!("unknown basis {s:?}")),
        }
    }
}

// ────────────────────────────────────────────────────────────────────
// Cycle types
// ────────────────────────────────────────────────────────────────────

/// A partition of n read as a conjugacy class of S_n; the ambient n is the
/// size of the partition.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CycleType(pub Partition);

impl CycleType {
    pub fn new(p: Partition) -> CycleType {
        CycleType(p)
    }

    pub fn n(&self) -> usize {
        self.0.size()
    }

    pub fn parts(&self) -> &[usize] {
        self.0.parts()
    }

    pub fn partition(&self) -> &Partition {
        &self.0
    }

    /// Centralizer order z_ρ.
    pub fn z(&self) -> BigInt {
        z_of(&self.0)
    }
}

impl From<Partition> for CycleType {
    fn from(p: Partition) -> CycleType {
        CycleType(p)
    }
}

impl fmt::Display for CycleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

// ────────────────────────────────────────────────────────────────────
// SymFunc
// ────────────────────────────────────────────────────────────────────

/// A symmetric function held in one of the five classical bases as a
/// sparse map from partitions to exact rational coefficients. Zero
/// coefficients are never stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymFunc {
    basis: Basis,
    terms: Terms,
}

impl SymFunc {
    pub fn zero(basis: Basis) -> SymFunc {
        SymFunc { basis, terms: Terms::new() }
    }

    /// The unit of the ring, indexed by the empty partition.
    pub fn one(basis: Basis) -> SymFunc {
        SymFunc::term(basis, Partition::empty(), Rat::one())
    }

    pub fn term(basis: Basis, index: Partition, coeff: Rat) -> SymFunc {
        let mut terms = Terms::new();
        if !coeff.is_zero() {
            terms.insert(index, coeff);
        }
        SymFunc { basis, terms }
    }

    pub fn from_terms(basis: Basis, terms: Terms) -> SymFunc {
        let terms = terms.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        SymFunc { basis, terms }
    }

    pub fn schur(index: &Partition) -> SymFunc {
        SymFunc::term(Basis::Schur, index.clone(), Rat::one())
    }

    pub fn monomial(index: &Partition) -> SymFunc {
        SymFunc::term(Basis::Monomial, index.clone(), Rat::one())
    }

    pub fn power(index: &Partition) -> SymFunc {
        SymFunc::term(Basis::PowerSum, index.clone(), Rat::one())
    }

    pub fn complete(index: &Partition) -> SymFunc {
        SymFunc::term(Basis::Homogeneous, index.clone(), Rat::one())
    }

    pub fn elementary(index: &Partition) -> SymFunc {
        SymFunc::term(Basis::Elementary, index.clone(), Rat::one())
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn terms(&self) -> &Terms {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, index: &Partition) -> Rat {
        self.terms.get(index).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn max_degree(&self) -> Option<usize> {
        self.terms.keys().map(Partition::size).max()
    }

    /// The part of the expansion indexed by partitions of exactly `d`.
    /// Degree is basis-independent, so no conversion happens.
    pub fn homogeneous_component(&self, d: usize) -> SymFunc {
        let terms = self
            .terms
            .iter()
            .filter(|(k, _)| k.size() == d)
            .map(|(k, c)| (k.clone(), c.clone()))
            .collect();
        SymFunc { basis: self.basis, terms }
    }

    pub fn scale(&self, c: &Rat) -> SymFunc {
        if c.is_zero() {
            return SymFunc::zero(self.basis);
        }
        let terms = self.terms.iter().map(|(k, v)| (k.clone(), v * c)).collect();
        SymFunc { basis: self.basis, terms }
    }

    pub fn add(&self, other: &SymFunc) -> SymFunc {
        assert_eq!(self.basis, other.basis, "addition requires matching bases; convert first");
        let mut terms = self.terms.clone();
        for (k, v) in &other.terms {
            add_term(&mut terms, k.clone(), v.clone());
        }
        SymFunc { basis: self.basis, terms }
    }

    pub fn sub(&self, other: &SymFunc) -> SymFunc {
        self.add(&other.scale(&-Rat::one()))
    }

    /// Re-expresses the element in `target`, routing through the power-sum
    /// basis. Coefficients stay exact.
    pub fn convert(&self, target: Basis) -> SymFunc {
        if self.basis == target {
            return self.clone();
        }
        let p = self.to_p_terms();
        SymFunc::from_terms(target, from_p_terms(target, &p))
    }

    fn to_p_terms(&self) -> Terms {
        match self.basis {
            Basis::PowerSum => self.terms.clone(),
            Basis::Homogeneous => expand_generators(&self.terms, transition::h_in_p),
            Basis::Elementary => expand_generators(&self.terms, transition::e_in_p),
            Basis::Schur => {
                let mut out = Terms::new();
                for (lam, c) in &self.terms {
                    add_scaled(&mut out, &schur_in_p(lam), c);
                }
                out
            }
            Basis::Monomial => {
                let mut out = Terms::new();
                for (mu, c) in &self.terms {
                    let tables = transition::monomial_tables(mu.size());
                    debug_assert_eq!(tables.degree, mu.size());
                    let row = tables.index_of(mu).unwrap();
                    for (col, rho) in tables.shapes.iter().enumerate() {
                        let entry = &tables.m_to_p[row][col];
                        if !entry.is_zero() {
                            add_term(&mut out, rho.clone(), c * entry);
                        }
                    }
                }
                out
            }
        }
    }

    /// Product of two symmetric functions. Operands in the same
    /// multiplicative basis (p, h or e) multiply by index concatenation and
    /// stay there; everything else lands in the Schur basis through the
    /// Littlewood–Richardson cache.
    pub fn multiply(&self, other: &SymFunc) -> SymFunc {
        if self.basis == other.basis && self.basis.is_multiplicative() {
            return SymFunc::from_terms(self.basis, term_product(&self.terms, &other.terms));
        }
        let a = self.convert(Basis::Schur);
        let b = other.convert(Basis::Schur);
        let mut out = Terms::new();
        for (la, ca) in &a.terms {
            for (lb, cb) in &b.terms {
                let c = ca * cb;
                add_scaled(&mut out, &lr_product(la, lb), &c);
            }
        }
        SymFunc::from_terms(Basis::Schur, out)
    }

    /// Product through the power-sum basis, the route the LR cache is
    /// checked against. Result is in the p basis.
    pub fn multiply_via_p(&self, other: &SymFunc) -> SymFunc {
        let a = self.to_p_terms();
        let b = other.to_p_terms();
        SymFunc::from_terms(Basis::PowerSum, term_product(&a, &b))
    }

    /// Hall pairing: ⟨p_ρ, p_σ⟩ = z_ρ [ρ=σ], equivalently ⟨s_λ, s_μ⟩ =
    /// [λ=μ]. Two Schur-basis operands pair termwise by orthonormality;
    /// anything else converts to the p basis.
    pub fn hall_inner(&self, other: &SymFunc) -> Rat {
        if self.basis == Basis::Schur && other.basis == Basis::Schur {
            let mut total = Rat::zero();
            for (k, a) in &self.terms {
                if let Some(b) = other.terms.get(k) {
                    total += a * b;
                }
            }
            return total;
        }
        let a = self.to_p_terms();
        let b = other.to_p_terms();
        let mut total = Rat::zero();
        for (k, ca) in &a {
            if let Some(cb) = b.get(k) {
                total += ca * cb * Rat::from_integer(z_of(k));
            }
        }
        total
    }

    /// Plethysm f[g] truncated to degree ≤ `bound`, via the substitution
    /// rule p_k[g] = g with every index m scaled to km. Fails when g is not
    /// known to a high enough degree to determine the result.
    pub fn plethysm(&self, g: &TruncatedSeries, bound: usize) -> Result<SymFunc, PlethysmError> {
        let fp = self.to_p_terms();
        if !g.exact {
            // p_k[g] needs g up to degree ⌊bound/k⌋; the smallest part
            // appearing in f's p-support is the binding one
            let min_part = fp.keys().flat_map(|pi| pi.parts().iter().copied()).min();
            if let Some(k) = min_part {
                let required = bound / k;
                if g.bound < required {
                    return Err(PlethysmError::InsufficientTruncation {
                        required,
                        available: g.bound,
                    });
                }
            }
        }
        let g_p = g.combined_p_terms(bound);
        let mut out = Terms::new();
        for (pi, c) in &fp {
            let mut acc = Terms::from([(Partition::empty(), Rat::one())]);
            for &k in pi.parts() {
                let scaled = scale_indices(&g_p, k, bound);
                acc = term_product_truncated(&acc, &scaled, bound);
                if acc.is_empty() {
                    break;
                }
            }
            add_scaled(&mut out, &acc, c);
        }
        Ok(SymFunc::from_terms(Basis::PowerSum, out))
    }

    /// Plethysm with a polynomial inner argument; never under-truncated.
    pub fn plethysm_poly(&self, g: &SymFunc, bound: usize) -> SymFunc {
        self.plethysm(&TruncatedSeries::from_polynomial(g), bound)
            .expect("polynomial plethysm cannot be under-truncated")
    }

    /// Value of f at the eigenvalue multiset of a permutation of cycle type
    /// ρ: p_k picks up Σ m over the parts m of ρ dividing k.
    pub fn eval_at_cycle_type(&self, rho: &CycleType) -> Rat {
        let fp = self.to_p_terms();
        let mut total = Rat::zero();
        for (pi, c) in &fp {
            let mut v = c.clone();
            for &k in pi.parts() {
                let s: usize = rho.parts().iter().filter(|&&m| k % m == 0).sum();
                v *= rat(s as i64);
            }
            total += v;
        }
        if self.basis == Basis::Schur && self.terms.values().all(|c| c.is_integer()) {
            debug_assert!(
                total.is_integer(),
                "integer Schur expansion evaluated to a non-integer at {rho}"
            );
        }
        total
    }

    // ── JSON ──────────────────────────────────────────────────────

    /// {"basis":"s","terms":[{"mu":[2,1],"coeff":"3/2"}]} with exact
    /// rational coefficients as strings.
    pub fn to_json(&self) -> serde_json::Value {
        let terms: Vec<serde_json::Value> = self
            .terms
            .iter()
            .map(|(mu, c)| {
                serde_json::json!({
                    "mu": mu.parts(),
                    "coeff": c.to_string(),
                })
            })
            .collect();
        serde_json::json!({ "basis": self.basis.to_string(), "terms": terms })
    }

    pub fn from_json(v: &serde_json::Value) -> Result<SymFunc, String> {
        let basis: Basis =
            v.get("basis").and_then(|b| b.as_str()).ok_or("missing \"basis\"")?.parse()?;
        let items = v.get("terms").and_then(|t| t.as_array()).ok_or("missing \"terms\" array")?;
        let mut terms = Terms::new();
        for item in items {
            let mu =
                item.get("mu").and_then(|m| m.as_array()).ok_or("term missing \"mu\" array")?;
            let parts: Vec<usize> = mu
                .iter()
                .map(|x| x.as_u64().map(|u| u as usize).ok_or_else(|| format!("bad part {x}")))
                .collect::<Result<_, _>>()?;
            let index = Partition::new(parts).map_err(|e| e.to_string())?;
            let coeff_raw = item.get("coeff").ok_or("term missing \"coeff\"")?;
            let coeff_str = match coeff_raw {
                serde_json::Value::String(s) => s.clone(),
                serde_json::Value::Number(n) => n.to_string(),
                other => return Err(format!("bad coefficient {other}")),
            };
            let coeff: Rat = coeff_str
                .trim()
                .parse()
                .map_err(|e| format!("bad coefficient {coeff_str:?}: {e}"))?;
            add_term(&mut terms, index, coeff);
        }
        Ok(SymFunc { basis, terms })
    }
}

impl fmt::Display for SymFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let letter = self.basis.letter();
        let mut first = true;
        for (index, c) in &self.terms {
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mag = c.abs();
            if !mag.is_one() {
                write!(f, "{mag}*")?;
            }
            write!(f, "{letter}{index}")?;
        }
        Ok(())
    }
}

fn expand_generators<F>(terms: &Terms, gen: F) -> Terms
where
    F: Fn(usize) -> Arc<Terms>,
{
    let mut out = Terms::new();
    for (index, c) in terms {
        let mut acc = Terms::from([(Partition::empty(), Rat::one())]);
        for &k in index.parts() {
            acc = term_product(&acc, &gen(k));
        }
        add_scaled(&mut out, &acc, c);
    }
    out
}

fn from_p_terms(target: Basis, p: &Terms) -> Terms {
    match target {
        Basis::PowerSum => p.clone(),
        Basis::Schur => p_terms_to_schur(p),
        Basis::Homogeneous => expand_generators(p, transition::p_in_h),
        Basis::Elementary => expand_generators(p, transition::p_in_e),
        Basis::Monomial => {
            let mut out = Terms::new();
            for (rho, c) in p {
                let tables = transition::monomial_tables(rho.size());
                let row = tables.index_of(rho).unwrap();
                for (col, mu) in tables.shapes.iter().enumerate() {
                    let entry = &tables.p_to_m[row][col];
                    if !entry.is_zero() {
                        add_term(&mut out, mu.clone(), c * entry);
                    }
                }
            }
            out
        }
    }
}

/// Index scaling for p_k[−]: every p-index part m becomes km, so degree d
/// becomes kd; terms pushed past `bound` are dropped.
fn scale_indices(g: &Terms, k: usize, bound: usize) -> Terms {
    let mut out = Terms::new();
    for (pi, c) in g {
        if pi.size() * k > bound {
            continue;
        }
        let parts: Vec<usize> = pi.parts().iter().map(|&m| m * k).collect();
        out.insert(Partition::new(parts).unwrap(), c.clone());
    }
    out
}

// ────────────────────────────────────────────────────────────────────
// Errors
// ────────────────────────────────────────────────────────────────────

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PlethysmError {
    /// The inner series is truncated below the degree the substitution
    /// rule needs to determine the requested output.
    InsufficientTruncation { required: usize, available: usize },
}

impl fmt::Display for PlethysmError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PlethysmError::InsufficientTruncation { required, available } => write!(
                f,
                "inner series known to degree {available} but degree {required} is required"
            ),
        }
    }
}

impl std::error::Error for PlethysmError {}

// ────────────────────────────────────────────────────────────────────
// Truncated series
// ────────────────────────────────────────────────────────────────────

/// A symmetric-function series known up to a degree bound, stored as one
/// homogeneous p-basis component per degree. `exact` marks series that are
/// actually polynomials, whose components above the bound are zero rather
/// than unknown.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedSeries {
    bound: usize,
    exact: bool,
    components: Vec<SymFunc>,
}

impl TruncatedSeries {
    fn build<F>(bound: usize, exact: bool, mut component: F) -> TruncatedSeries
    where
        F: FnMut(usize) -> Terms,
    {
        let components = (0..=bound)
            .map(|d| {
                let terms = component(d);
                debug_assert!(terms.keys().all(|k| k.size() == d));
                SymFunc::from_terms(Basis::PowerSum, terms)
            })
            .collect();
        TruncatedSeries { bound, exact, components }
    }

    pub fn bound(&self) -> usize {
        self.bound
    }

    pub fn is_exact(&self) -> bool {
        self.exact
    }

    /// The homogeneous degree-d component, in the p basis. Zero above the
    /// bound for exact series; panics there otherwise, because the value
    /// is unknown.
    pub fn component(&self, d: usize) -> SymFunc {
        if d <= self.bound {
            self.components[d].clone()
        } else if self.exact {
            SymFunc::zero(Basis::PowerSum)
        } else {
            panic!("component {d} above truncation bound {}", self.bound)
        }
    }

    /// A polynomial viewed as an everywhere-known series.
    pub fn from_polynomial(f: &SymFunc) -> TruncatedSeries {
        let p = f.convert(Basis::PowerSum);
        let bound = p.max_degree().unwrap_or(0);
        TruncatedSeries::build(bound, true, |d| p.homogeneous_component(d).terms.clone())
    }

    /// Wraps a polynomial that is only trusted up to `bound`, e.g. the
    /// output of a truncated plethysm, as an inexact series.
    pub fn from_truncation(f: &SymFunc, bound: usize) -> TruncatedSeries {
        let p = f.convert(Basis::PowerSum);
        debug_assert!(p.max_degree().unwrap_or(0) <= bound);
        TruncatedSeries::build(bound, false, |d| p.homogeneous_component(d).terms.clone())
    }

    pub fn truncate(&self, bound: usize) -> TruncatedSeries {
        TruncatedSeries::build(bound, self.exact, |d| self.component(d).terms.clone())
    }

    /// Degreewise product. The result is exact only if both factors are;
    /// its bound is capped by each inexact factor's bound.
    pub fn product(&self, other: &TruncatedSeries) -> TruncatedSeries {
        let eff = |s: &TruncatedSeries| if s.exact { usize::MAX } else { s.bound };
        let bound = eff(self).min(eff(other));
        let bound = if bound == usize::MAX {
            // both polynomials: degrees add
            self.bound + other.bound
        } else {
            bound
        };
        TruncatedSeries::build(bound, self.exact && other.exact, |d| {
            let mut terms = Terms::new();
            for i in 0..=d {
                let a = self.component_terms(i);
                let b = other.component_terms(d - i);
                if let (Some(a), Some(b)) = (a, b) {
                    for (ka, ca) in a.iter() {
                        for (kb, cb) in b.iter() {
                            add_term(&mut terms, transition::merge_parts(ka, kb), ca * cb);
                        }
                    }
                }
            }
            terms
        })
    }

    fn component_terms(&self, d: usize) -> Option<&Terms> {
        if d <= self.bound {
            Some(&self.components[d].terms)
        } else if self.exact {
            None
        } else {
            panic!("component {d} above truncation bound {}", self.bound)
        }
    }

    /// Sum of all stored components, a p-basis polynomial of degree ≤ bound.
    pub fn sum(&self) -> SymFunc {
        let mut terms = Terms::new();
        for c in &self.components {
            add_scaled(&mut terms, &c.terms, &Rat::one());
        }
        SymFunc::from_terms(Basis::PowerSum, terms)
    }

    /// All components merged into one p-expression, truncated at `bound`.
    fn combined_p_terms(&self, bound: usize) -> Terms {
        let top = self.bound.min(bound);
        let mut terms = Terms::new();
        for c in &self.components[..=top] {
            add_scaled(&mut terms, &c.terms, &Rat::one());
        }
        terms
    }
}

/// Number-theoretic Möbius function, by trial division.
fn moebius(mut n: usize) -> i64 {
    debug_assert!(n >= 1);
    let mut result = 1i64;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            n /= p;
            if n.is_multiple_of(p) {
                return 0;
            }
            result = -result;
        }
        p += 1;
    }
    if n > 1 {
        result = -result;
    }
    result
}

/// L = Σ_{m≥1} (1/m) Σ_{d|m} μ(d) p_d^{m/d}, truncated to degree `bound`.
/// The degree-m component is the character of the free Lie algebra piece
/// of rank m.
pub fn lyndon_series(bound: usize) -> TruncatedSeries {
    TruncatedSeries::build(bound, false, |m| {
        let mut terms = Terms::new();
        if m == 0 {
            return terms;
        }
        for d in 1..=m {
            if m % d != 0 {
                continue;
            }
            let mu = moebius(d);
            if mu == 0 {
                continue;
            }
            let index = Partition::new(vec![d; m / d]).unwrap();
            add_term(&mut terms, index, Rat::new(BigInt::from(mu), BigInt::from(m)));
        }
        terms
    })
}

/// H = Σ_{m≥0} h_m, truncated to degree `bound`.
pub fn h_series(bound: usize) -> TruncatedSeries {
    TruncatedSeries::build(bound, false, |m| transition::h_in_p(m).as_ref().clone())
}

/// χ^λ(ρ) by Murnaghan–Nakayama strip removal, largest cycle first.
/// Panics unless |λ| = |ρ|.
pub fn mn_character(lambda: &Partition, rho: &CycleType) -> i64 {
    assert_eq!(lambda.size(), rho.n(), "character requires |lambda| = |rho|");
    let mut memo = std::collections::HashMap::new();
    transition::mn_character_value(lambda, rho.parts(), &mut memo)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::Partition;

    fn p(parts: &[usize]) -> Partition {
        Partition::of(parts)
    }

    fn half() -> Rat {
        Rat::new(1.into(), 2.into())
    }

    // ── conversions ──────────────────────────────────────────────

    #[test]
    fn h3_is_schur_row() {
        let f = SymFunc::complete(&p(&[3])).convert(Basis::Schur);
        assert_eq!(f, SymFunc::schur(&p(&[3])));
    }

    #[test]
    fn e3_is_schur_column() {
        let f = SymFunc::elementary(&p(&[3])).convert(Basis::Schur);
        assert_eq!(f, SymFunc::schur(&p(&[1, 1, 1])));
    }

    #[test]
    fn p2_in_schur_basis() {
        let f = SymFunc::power(&p(&[2])).convert(Basis::Schur);
        assert_eq!(f.coeff(&p(&[2])), rat(1));
        assert_eq!(f.coeff(&p(&[1, 1])), rat(-1));
        assert_eq!(f.terms().len(), 2);
    }

    #[test]
    fn h2_in_monomial_basis() {
        // h_2 = m_2 + m_{11}
        let f = SymFunc::complete(&p(&[2])).convert(Basis::Monomial);
        assert_eq!(f.coeff(&p(&[2])), rat(1));
        assert_eq!(f.coeff(&p(&[1, 1])), rat(1));
    }

    #[test]
    fn round_trip_schur_monomial() {
        let f = SymFunc::schur(&p(&[3, 1]));
        let back = f.convert(Basis::Monomial).convert(Basis::Schur);
        assert_eq!(back, f);
    }

    // ── products ─────────────────────────────────────────────────

    #[test]
    fn pieri_square_of_s1() {
        let s1 = SymFunc::schur(&p(&[1]));
        let sq = s1.multiply(&s1);
        assert_eq!(sq.coeff(&p(&[2])), rat(1));
        assert_eq!(sq.coeff(&p(&[1, 1])), rat(1));
        assert_eq!(sq.terms().len(), 2);
    }

    #[test]
    fn unit_is_neutral() {
        let f = SymFunc::schur(&p(&[2, 1]));
        assert_eq!(f.multiply(&SymFunc::one(Basis::Schur)), f);
    }

    #[test]
    fn pieri_h1_times_s2() {
        let f = SymFunc::complete(&p(&[1])).multiply(&SymFunc::schur(&p(&[2])));
        assert_eq!(f.coeff(&p(&[3])), rat(1));
        assert_eq!(f.coeff(&p(&[2, 1])), rat(1));
        assert_eq!(f.terms().len(), 2);
    }

    #[test]
    fn power_product_concatenates() {
        let f = SymFunc::power(&p(&[2])).multiply(&SymFunc::power(&p(&[3, 1])));
        assert_eq!(f.basis(), Basis::PowerSum);
        assert_eq!(f.coeff(&p(&[3, 2, 1])), rat(1));
    }

    #[test]
    fn lr_route_matches_p_route() {
        let a = SymFunc::schur(&p(&[2, 1]));
        let b = SymFunc::schur(&p(&[2, 2]));
        let via_lr = a.multiply(&b);
        let via_p = a.multiply_via_p(&b).convert(Basis::Schur);
        assert_eq!(via_lr, via_p);
    }

    // ── Hall inner product ───────────────────────────────────────

    #[test]
    fn schur_orthonormality() {
        let s21 = SymFunc::schur(&p(&[2, 1]));
        let s3 = SymFunc::schur(&p(&[3]));
        assert_eq!(s21.hall_inner(&s21), rat(1));
        assert_eq!(s21.hall_inner(&s3), rat(0));
    }

    #[test]
    fn power_sum_norms() {
        let p2 = SymFunc::power(&p(&[2]));
        let p11 = SymFunc::power(&p(&[1, 1]));
        let p21 = SymFunc::power(&p(&[2, 1]));
        assert_eq!(p2.hall_inner(&p11), rat(0));
        assert_eq!(p21.hall_inner(&p21), rat(2));
    }

    #[test]
    fn mixed_basis_pairing() {
        // ⟨h_2, m_2⟩ = ⟨s_2 + s_11 dual side⟩... h and m are dual bases
        let h2 = SymFunc::complete(&p(&[2]));
        let m2 = SymFunc::monomial(&p(&[2]));
        let m11 = SymFunc::monomial(&p(&[1, 1]));
        assert_eq!(h2.hall_inner(&m2), rat(1));
        assert_eq!(h2.hall_inner(&m11), rat(0));
    }

    // ── plethysm ─────────────────────────────────────────────────

    #[test]
    fn power_sum_substitution() {
        let f = SymFunc::power(&p(&[2])).plethysm_poly(&SymFunc::power(&p(&[3])), 6);
        assert_eq!(f, SymFunc::power(&p(&[6])));
    }

    #[test]
    fn s1_is_plethysm_identity() {
        let g = SymFunc::schur(&p(&[2, 1])).sub(&SymFunc::schur(&p(&[1, 1])).scale(&rat(2)));
        let f = SymFunc::schur(&p(&[1])).plethysm_poly(&g, 3);
        assert_eq!(f.convert(Basis::Schur), g);
    }

    #[test]
    fn exterior_square_of_s2() {
        let f = SymFunc::schur(&p(&[1, 1])).plethysm_poly(&SymFunc::schur(&p(&[2])), 4);
        assert_eq!(f.convert(Basis::Schur), SymFunc::schur(&p(&[3, 1])));
    }

    #[test]
    fn under_truncated_series_is_refused() {
        let g = lyndon_series(2);
        let err = SymFunc::power(&p(&[1])).plethysm(&g, 6).unwrap_err();
        assert_eq!(err, PlethysmError::InsufficientTruncation { required: 6, available: 2 });
    }

    #[test]
    fn deep_series_is_accepted() {
        // only p_2 appears, so degree 6 output needs g through degree 3
        let g = lyndon_series(3);
        assert!(SymFunc::power(&p(&[2])).plethysm(&g, 6).is_ok());
    }

    // ── characters ───────────────────────────────────────────────

    #[test]
    fn character_at_identity_is_dimension() {
        let rho = CycleType::new(p(&[1, 1, 1]));
        assert_eq!(mn_character(&p(&[2, 1]), &rho), 2);
    }

    #[test]
    fn character_at_three_cycle() {
        assert_eq!(mn_character(&p(&[2, 1]), &CycleType::new(p(&[3]))), -1);
    }

    #[test]
    fn trivial_character_is_one() {
        for parts in [vec![4], vec![2, 2], vec![2, 1, 1]] {
            let rho = CycleType::new(Partition::new(parts).unwrap());
            assert_eq!(mn_character(&p(&[4]), &rho), 1);
        }
    }

    #[test]
    fn vanishing_character_value() {
        assert_eq!(mn_character(&p(&[2, 1]), &CycleType::new(p(&[2, 1]))), 0);
    }

    #[test]
    #[should_panic(expected = "character requires")]
    fn character_size_mismatch_panics() {
        mn_character(&p(&[2, 1]), &CycleType::new(p(&[2])));
    }

    // ── evaluation ───────────────────────────────────────────────

    #[test]
    fn eval_power_sum_at_class() {
        // eigenvalues of a (2,1) permutation are {1, 1, −1}
        let rho = CycleType::new(p(&[2, 1]));
        assert_eq!(SymFunc::power(&p(&[2])).eval_at_cycle_type(&rho), rat(3));
        assert_eq!(SymFunc::power(&p(&[1])).eval_at_cycle_type(&rho), rat(1));
    }

    #[test]
    fn eval_at_identity_counts_letters() {
        let rho = CycleType::new(p(&[1, 1, 1, 1]));
        for k in 1..=4 {
            assert_eq!(SymFunc::power(&p(&[k])).eval_at_cycle_type(&rho), rat(4));
        }
    }

    #[test]
    fn trace_counts_fixed_points() {
        let rho = CycleType::new(p(&[3, 1]));
        assert_eq!(SymFunc::schur(&p(&[1])).eval_at_cycle_type(&rho), rat(1));
    }

    // ── series ───────────────────────────────────────────────────

    #[test]
    fn lyndon_low_components() {
        let l = lyndon_series(3);
        assert_eq!(l.component(1), SymFunc::power(&p(&[1])));
        assert_eq!(l.component(2).convert(Basis::Schur), SymFunc::schur(&p(&[1, 1])));
        assert_eq!(l.component(3).convert(Basis::Schur), SymFunc::schur(&p(&[2, 1])));
    }

    #[test]
    fn lyndon_counts_binary_necklaces() {
        // principal evaluation p_d ↦ 2 of the degree-4 component counts
        // Lyndon words of length 4 over two letters
        let c = lyndon_series(4).component(4);
        let mut total = Rat::zero();
        for (pi, coeff) in c.terms() {
            let mut v = coeff.clone();
            for _ in 0..pi.len() {
                v *= rat(2);
            }
            total += v;
        }
        assert_eq!(total, rat(3));
    }

    #[test]
    fn h_series_components() {
        let h = h_series(2);
        assert_eq!(h.component(0), SymFunc::one(Basis::PowerSum));
        assert_eq!(h.component(1), SymFunc::power(&p(&[1])));
        assert_eq!(h.component(2).coeff(&p(&[2])), half());
        assert_eq!(h.component(2).coeff(&p(&[1, 1])), half());
        assert_eq!(h.component(2).convert(Basis::Schur), SymFunc::schur(&p(&[2])));
    }

    #[test]
    fn series_product_degrees_add() {
        let h = h_series(4);
        let sq = h.product(&h);
        // degree-2 component of H² is h_2·1 + h_1·h_1 + 1·h_2 = 3s_2 + s_11
        let c2 = sq.component(2).convert(Basis::Schur);
        assert_eq!(c2.coeff(&p(&[2])), rat(3));
        assert_eq!(c2.coeff(&p(&[1, 1])), rat(1));
    }

    // ── JSON ─────────────────────────────────────────────────────

    #[test]
    fn json_round_trip() {
        let f = SymFunc::schur(&p(&[2, 1]))
            .scale(&Rat::new(3.into(), 2.into()))
            .add(&SymFunc::schur(&p(&[1])).scale(&rat(-2)));
        let back = SymFunc::from_json(&f.to_json()).unwrap();
        assert_eq!(back, f);
    }

    #[test]
    fn json_accepts_bare_integers() {
        let v = serde_json::json!({
            "basis": "p",
            "terms": [{"mu": [2], "coeff": 4}, {"mu": [1,1], "coeff": "1/2"}]
        });
        let f = SymFunc::from_json(&v).unwrap();
        assert_eq!(f.coeff(&p(&[2])), rat(4));
        assert_eq!(f.coeff(&p(&[1, 1])), half());
    }

    #[test]
    fn coefficient_strings_are_exact() {
        let f = SymFunc::term(Basis::Schur, p(&[1]), Rat::new(3.into(), 2.into()));
        let v = f.to_json();
        assert_eq!(v["terms"][0]["coeff"], "3/2");
        let g = SymFunc::term(Basis::Schur, p(&[1]), rat(-7));
        assert_eq!(g.to_json()["terms"][0]["coeff"], "-7");
    }

    // ── misc ─────────────────────────────────────────────────────

    #[test]
    fn moebius_values() {
        let expected = [1, -1, -1, 0, -1, 1, -1, 0, 0, 1];
        for (i, &e) in expected.iter().enumerate() {
            assert_eq!(moebius(i + 1), e, "mu({})", i + 1);
        }
    }

    #[test]
    fn zero_coefficients_vanish() {
        let f = SymFunc::schur(&p(&[1]));
        let z = f.sub(&f);
        assert!(z.is_zero());
        assert_eq!(z.terms().len(), 0);
    }

    #[test]
    fn display_is_readable() {
        let f = SymFunc::schur(&p(&[2])).add(&SymFunc::schur(&p(&[1, 1])).scale(&rat(-3)));
        assert_eq!(f.to_string(), "s(2) - 3*s(1,1)");
    }
}
