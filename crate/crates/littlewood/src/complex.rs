//! The Littlewood complex layer: multiplicity spaces M(λ, μ), the term
//! table of the complex for a given rank n with its cohomology placement,
//! stable Specht polynomials, and the two-alphabet functions used by the
//! Euler-characteristic identity.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Arc, OnceLock, RwLock};

use num_traits::{Signed, ToPrimitive, Zero};

use crate::bott::{bott, BottResult};
use crate::partition::{hook_dimension, partitions_of, Partition};
use crate::symfunc::{
    h_series, lyndon_series, rat, Basis, CycleType, Rat, SymFunc, TruncatedSeries,
};

// ────────────────────────────────────────────────────────────────────
// Multiplicity spaces
// ────────────────────────────────────────────────────────────────────

/// dim M(λ, μ) = ⟨s_{λ′}, s_{μ′}[L]·H⟩; zero whenever |μ| > |λ|.
pub fn mult_dim(lambda: &Partition, mu: &Partition) -> usize {
    if mu.size() > lambda.size() {
        return 0;
    }
    let character = module_character(mu, lambda.size());
    let pairing = SymFunc::schur(&lambda.conjugate()).hall_inner(&character);
    assert!(
        pairing.is_integer() && !pairing.is_negative(),
        "multiplicity must be a nonnegative integer, got {pairing}"
    );
    pairing.to_integer().to_usize().expect("multiplicity exceeds usize")
}

/// All multiplicities dim M(λ, μ) over |μ| ≤ |λ|, keyed by μ. Zero entries
/// are not stored.
pub struct MultiplicityTable {
    pub lambda: Partition,
    pub entries: BTreeMap<Partition, usize>,
}

pub fn multiplicity_table(lambda: &Partition) -> MultiplicityTable {
    let mut entries = BTreeMap::new();
    for m in 0..=lambda.size() {
        for mu in partitions_of(m) {
            let d = mult_dim(lambda, &mu);
            if d != 0 {
                entries.insert(mu, d);
            }
        }
    }
    MultiplicityTable { lambda: lambda.clone(), entries }
}

/// Character of 𝕊^{μ′}(L) ⊗ Sym: the product s_{μ′}[L]·H truncated to
/// degree `bound`, in the Schur basis. Memoized on (μ, bound).
pub fn module_character(mu: &Partition, bound: usize) -> SymFunc {
    type Cache = RwLock<HashMap<(Partition, usize), Arc<SymFunc>>>;
    static CACHE: OnceLock<Cache> = OnceLock::new();
    let cache = CACHE.get_or_init(|| RwLock::new(HashMap::new()));

    let key = (mu.clone(), bound);
    if let Some(f) = cache.read().unwrap().get(&key) {
        return f.as_ref().clone();
    }
    let inner = SymFunc::schur(&mu.conjugate())
        .plethysm(&lyndon_series(bound), bound)
        .expect("L is supplied exactly to the output bound");
    let series = TruncatedSeries::from_truncation(&inner, bound).product(&h_series(bound));
    let result = series.sum().convert(Basis::Schur);
    let arc = Arc::new(result.clone());
    cache.write().unwrap().entry(key).or_insert(arc);
    result
}

// ────────────────────────────────────────────────────────────────────
// Stable Specht polynomials
// ────────────────────────────────────────────────────────────────────

/// s_λ† = Σ_{|μ| ≤ |λ|} (−1)^{|λ|−|μ|} dim M(λ, μ) · s_μ, with exact
/// integer coefficients. Memoized per λ.
pub fn stable_specht(lambda: &Partition) -> SymFunc {
    type Cache = RwLock<HashMap<Partition, Arc<SymFunc>>>;
    static CACHE: OnceLock<Cache> = OnceLock::new();
    let cache = CACHE.get_or_init(|| RwLock::new(HashMap::new()));

    if let Some(f) = cache.read().unwrap().get(lambda) {
        return f.as_ref().clone();
    }
    let size = lambda.size();
    let mut total = SymFunc::zero(Basis::Schur);
    for m in 0..=size {
        let sign = if (size - m).is_multiple_of(2) { 1 } else { -1 };
        for mu in partitions_of(m) {
            let d = mult_dim(lambda, &mu);
            if d != 0 {
                total = total.add(&SymFunc::term(Basis::Schur, mu, rat(sign * d as i64)));
            }
        }
    }
    let arc = Arc::new(total.clone());
    cache.write().unwrap().entry(lambda.clone()).or_insert(arc);
    total
}

/// s_λ† at the eigenvalues of a permutation of cycle type ρ. The result is
/// a virtual character value; a non-integer would mean a broken invariant
/// and is reported by panic, never rounded.
pub fn eval_stable_specht(lambda: &Partition, rho: &CycleType) -> i64 {
    let value = stable_specht(lambda).eval_at_cycle_type(rho);
    assert!(value.is_integer(), "stable Specht value at {rho} must be an integer, got {value}");
    value.to_integer().to_i64().expect("character value exceeds i64")
}

// ────────────────────────────────────────────────────────────────────
// The complex for a given rank
// ────────────────────────────────────────────────────────────────────

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Cohomology {
    Acyclic,
    At { degree: usize, specht_label: Partition },
}

impl fmt::Display for Cohomology {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Cohomology::Acyclic => write!(f, "acyclic"),
            Cohomology::At { degree, specht_label } => {
                write!(f, "degree {degree}, label {specht_label}")
            }
        }
    }
}

/// Where the cohomology lives: concentrated in degree δ_n(λ) with label
/// λ[n] when the Bott rule is defined, acyclic otherwise.
pub fn cohomology(lambda: &Partition, n: usize) -> Cohomology {
    match bott(lambda, n as i64) {
        BottResult::Defined { result, delta } => {
            Cohomology::At { degree: delta, specht_label: result }
        }
        BottResult::Undefined => Cohomology::Acyclic,
    }
}

/// One summand M(λ, μ) ⊗ 𝕊^μ(kⁿ) of a cochain term.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComplexTerm {
    pub mu: Partition,
    pub mult: usize,
    pub dim: u64,
}

/// The full term table of the complex for (λ, n): cochain degree j holds
/// the summands with μ ⊢ |λ| − j and nonzero multiplicity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComplexDescriptor {
    pub lambda: Partition,
    pub n: usize,
    pub terms: Vec<Vec<ComplexTerm>>,
    pub cohomology: Cohomology,
}

impl ComplexDescriptor {
    /// Σ_j (−1)^j dim of the j-th term.
    pub fn euler_count(&self) -> i128 {
        let mut total = 0i128;
        for (j, list) in self.terms.iter().enumerate() {
            let dim: i128 = list.iter().map(|t| t.mult as i128 * t.dim as i128).sum();
            total += if j % 2 == 0 { dim } else { -dim };
        }
        total
    }

    /// The Euler count the cohomology placement predicts: 0 when acyclic,
    /// otherwise (−1)^degree times the hook-length dimension of the label.
    pub fn expected_euler(&self) -> i128 {
        match &self.cohomology {
            Cohomology::Acyclic => 0,
            Cohomology::At { degree, specht_label } => {
                let f = hook_dimension(specht_label) as i128;
                if degree % 2 == 0 {
                    f
                } else {
                    -f
                }
            }
        }
    }
}

/// dim 𝕊^μ(kⁿ), as the Schur function value at the identity permutation's
/// eigenvalues (n ones).
pub fn schur_dimension(mu: &Partition, n: usize) -> u64 {
    let identity = CycleType::new(Partition::new(vec![1; n]).unwrap());
    let value = SymFunc::schur(mu).eval_at_cycle_type(&identity);
    assert!(
        value.is_integer() && !value.is_negative(),
        "dimension must be a nonnegative integer, got {value}"
    );
    value.to_integer().to_u64().expect("dimension exceeds u64")
}

pub fn complex_terms(lambda: &Partition, n: usize) -> ComplexDescriptor {
    let size = lambda.size();
    let terms = (0..=size)
        .map(|j| {
            let mut list = Vec::new();
            for mu in partitions_of(size - j) {
                let mult = mult_dim(lambda, &mu);
                if mult != 0 {
                    let dim = schur_dimension(&mu, n);
                    list.push(ComplexTerm { mu, mult, dim });
                }
            }
            list
        })
        .collect();
    ComplexDescriptor { lambda: lambda.clone(), n, terms, cohomology: cohomology(lambda, n) }
}

// ────────────────────────────────────────────────────────────────────
// Two-alphabet symmetric functions
// ────────────────────────────────────────────────────────────────────

/// Σ c_{αβ} s_α(x) s_β(y): a finitely supported map from Schur pairs to
/// exact rationals, for identities that track two alphabets at once.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct BiSymFunc {
    terms: BTreeMap<(Partition, Partition), Rat>,
}

impl BiSymFunc {
    pub fn zero() -> BiSymFunc {
        BiSymFunc::default()
    }

    pub fn terms(&self) -> &BTreeMap<(Partition, Partition), Rat> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, alpha: &Partition, beta: &Partition) -> Rat {
        self.terms.get(&(alpha.clone(), beta.clone())).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn add_term(&mut self, alpha: Partition, beta: Partition, c: Rat) {
        use std::collections::btree_map::Entry;
        if c.is_zero() {
            return;
        }
        match self.terms.entry((alpha, beta)) {
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
            Entry::Vacant(v) => {
                v.insert(c);
            }
        }
    }

    /// Adds scale · f(x) · g(y), both factors in the Schur basis.
    pub fn add_product(&mut self, f: &SymFunc, g: &SymFunc, scale: &Rat) {
        assert_eq!(f.basis(), Basis::Schur);
        assert_eq!(g.basis(), Basis::Schur);
        for (alpha, a) in f.terms() {
            for (beta, b) in g.terms() {
                self.add_term(alpha.clone(), beta.clone(), a * b * scale);
            }
        }
    }

    pub fn sub(&self, other: &BiSymFunc) -> BiSymFunc {
        let mut out = self.clone();
        for ((a, b), c) in &other.terms {
            out.add_term(a.clone(), b.clone(), -c.clone());
        }
        out
    }
}
