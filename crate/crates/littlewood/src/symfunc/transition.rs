//! Memoized transition data between bases: Murnaghan–Nakayama character
//! tables, Newton expansions of the h/e/p generators, monomial-basis
//! matrices, and the Littlewood–Richardson product cache.
//!
//! Every cache is behind an `RwLock`: tables are computed outside the lock
//! and inserted once, after which readers share them freely. A lost insert
//! race recomputes identical data.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::partition::{mn_strips, partitions_of, Partition};

pub type Rat = BigRational;

/// Sparse expansion of a symmetric function in some basis.
pub type Terms = BTreeMap<Partition, Rat>;

pub fn rat(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// z_ρ = ∏_v v^{a_v} · a_v!, the centralizer order of the class ρ.
pub fn z_of(rho: &Partition) -> BigInt {
    let mut z = BigInt::one();
    let mut run = 0usize;
    let mut prev = 0usize;
    for &v in rho.parts() {
        run = if v == prev { run + 1 } else { 1 };
        z *= BigInt::from(v * run);
        prev = v;
    }
    z
}

/// Multiset union of parts: the index of a product in a multiplicative
/// basis (p, h or e).
pub fn merge_parts(a: &Partition, b: &Partition) -> Partition {
    let mut parts: Vec<usize> = a.parts().iter().chain(b.parts()).copied().collect();
    parts.sort_unstable_by(|x, y| y.cmp(x));
    Partition::new(parts).unwrap()
}

/// Product in a multiplicative basis: indices concatenate, coefficients
/// multiply.
pub fn term_product(a: &Terms, b: &Terms) -> Terms {
    term_product_truncated(a, b, usize::MAX)
}

/// Same, discarding output terms of degree above `max_degree`.
pub fn term_product_truncated(a: &Terms, b: &Terms, max_degree: usize) -> Terms {
    let mut out = Terms::new();
    for (pa, ca) in a {
        for (pb, cb) in b {
            if pa.size() + pb.size() > max_degree {
                continue;
            }
            let key = merge_parts(pa, pb);
            let c = ca * cb;
            add_term(&mut out, key, c);
        }
    }
    out
}

pub fn add_term(terms: &mut Terms, key: Partition, c: Rat) {
    use std::collections::btree_map::Entry;
    if c.is_zero() {
        return;
    }
    match terms.entry(key) {
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

pub fn add_scaled(dst: &mut Terms, src: &Terms, scale: &Rat) {
    if scale.is_zero() {
        return;
    }
    for (k, v) in src {
        add_term(dst, k.clone(), v * scale);
    }
}

// ────────────────────────────────────────────────────────────────────
// Character tables
// ────────────────────────────────────────────────────────────────────

/// The character table of S_n: values χ^λ(ρ) with shapes and classes both
/// listed in reverse-lexicographic order.
pub struct CharTable {
    pub degree: usize,
    pub shapes: Vec<Partition>,
    position: HashMap<Partition, usize>,
    /// values[shape][class]
    pub values: Vec<Vec<i64>>,
}

impl CharTable {
    pub fn index_of(&self, p: &Partition) -> Option<usize> {
        self.position.get(p).copied()
    }

    /// χ^λ(ρ); panics if either partition has the wrong size.
    pub fn value(&self, shape: &Partition, class: &Partition) -> i64 {
        let si = self.index_of(shape).expect("shape not of table degree");
        let ci = self.index_of(class).expect("class not of table degree");
        self.values[si][ci]
    }
}

/// χ^λ(ρ) by border-strip removal, taking the largest remaining cycle
/// first.
pub(crate) fn mn_character_value(
    lambda: &Partition,
    cycles: &[usize],
    memo: &mut HashMap<(Partition, Vec<usize>), i64>,
) -> i64 {
    mn_value(lambda, cycles, memo)
}

fn mn_value(
    lambda: &Partition,
    cycles: &[usize],
    memo: &mut HashMap<(Partition, Vec<usize>), i64>,
) -> i64 {
    if cycles.is_empty() {
        debug_assert!(lambda.is_empty());
        return 1;
    }
    let key = (lambda.clone(), cycles.to_vec());
    if let Some(&v) = memo.get(&key) {
        return v;
    }
    let mut total = 0i64;
    for (rest, ht) in mn_strips(lambda, cycles[0]) {
        let sign = if ht % 2 == 0 { 1 } else { -1 };
        total += sign * mn_value(&rest, &cycles[1..], memo);
    }
    memo.insert(key, total);
    total
}

fn build_char_table(n: usize) -> CharTable {
    let shapes: Vec<Partition> = partitions_of(n).collect();
    let position: HashMap<Partition, usize> =
        shapes.iter().enumerate().map(|(i, p)| (p.clone(), i)).collect();
    let mut memo = HashMap::new();
    let values = shapes
        .iter()
        .map(|shape| shapes.iter().map(|class| mn_value(shape, class.parts(), &mut memo)).collect())
        .collect();
    CharTable { degree: n, shapes, position, values }
}

type CharCache = RwLock<HashMap<usize, Arc<CharTable>>>;

fn char_cache() -> &'static CharCache {
    static CACHE: OnceLock<CharCache> = OnceLock::new();
    CACHE.get_or_init(|| RwLock::new(HashMap::new()))
}

pub fn char_table(n: usize) -> Arc<CharTable> {
    if let Some(t) = char_cache().read().unwrap().get(&n) {
        return Arc::clone(t);
    }
    let table = Arc::new(build_char_table(n));
    let mut guard = char_cache().write().unwrap();
    Arc::clone(guard.entry(n).or_insert(table))
}

// ────────────────────────────────────────────────────────────────────
// Generator expansions (Newton recurrences)
// ────────────────────────────────────────────────────────────────────

#[derive(Default)]
struct GenCache {
    h_in_p: Vec<Arc<Terms>>,
    e_in_p: Vec<Arc<Terms>>,
    p_in_h: Vec<Arc<Terms>>,
    p_in_e: Vec<Arc<Terms>>,
}

fn gen_cache() -> &'static RwLock<GenCache> {
    static CACHE: OnceLock<RwLock<GenCache>> = OnceLock::new();
    CACHE.get_or_init(|| RwLock::new(GenCache::default()))
}

fn single(part: usize) -> Terms {
    let key = if part == 0 { Partition::empty() } else { Partition::of(&[part]) };
    Terms::from([(key, Rat::one())])
}

fn ensure_generators(n: usize) {
    if gen_cache().read().unwrap().h_in_p.len() > n {
        return;
    }
    let mut g = gen_cache().write().unwrap();
    if g.h_in_p.is_empty() {
        let unit = Arc::new(single(0));
        g.h_in_p.push(Arc::clone(&unit));
        g.e_in_p.push(Arc::clone(&unit));
        // p_0 is not a generator; the slot keeps indices aligned
        g.p_in_h.push(Arc::clone(&unit));
        g.p_in_e.push(unit);
    }
    for m in g.h_in_p.len()..=n {
        let sign = |k: usize| if k.is_multiple_of(2) { -Rat::one() } else { Rat::one() };

        // m·h_m = Σ_{k=1}^{m} p_k h_{m−k}
        let mut h = Terms::new();
        for k in 1..=m {
            let shifted = term_product(&single(k), &g.h_in_p[m - k]);
            add_scaled(&mut h, &shifted, &Rat::one());
        }
        let inv_m = Rat::new(BigInt::one(), BigInt::from(m));
        let h: Terms = h.into_iter().map(|(p, c)| (p, c * &inv_m)).collect();

        // m·e_m = Σ_{k=1}^{m} (−1)^{k−1} p_k e_{m−k}
        let mut e = Terms::new();
        for k in 1..=m {
            let shifted = term_product(&single(k), &g.e_in_p[m - k]);
            add_scaled(&mut e, &shifted, &sign(k));
        }
        let e: Terms = e.into_iter().map(|(p, c)| (p, c * &inv_m)).collect();

        // p_m = m·h_m − Σ_{k=1}^{m−1} p_k h_{m−k}, expressed in the h basis
        let mut ph = Terms::new();
        add_term(&mut ph, Partition::of(&[m]), rat(m as i64));
        for k in 1..m {
            let prod = term_product(&g.p_in_h[k], &single(m - k));
            add_scaled(&mut ph, &prod, &-Rat::one());
        }

        // p_m = (−1)^{m−1} (m·e_m − Σ_{k=1}^{m−1} (−1)^{k−1} p_k e_{m−k})
        let mut pe = Terms::new();
        add_term(&mut pe, Partition::of(&[m]), rat(m as i64));
        for k in 1..m {
            let prod = term_product(&g.p_in_e[k], &single(m - k));
            add_scaled(&mut pe, &prod, &-sign(k));
        }
        let pe: Terms = pe.into_iter().map(|(p, c)| (p, c * sign(m))).collect();

        g.h_in_p.push(Arc::new(h));
        g.e_in_p.push(Arc::new(e));
        g.p_in_h.push(Arc::new(ph));
        g.p_in_e.push(Arc::new(pe));
    }
}

pub fn h_in_p(n: usize) -> Arc<Terms> {
    ensure_generators(n);
    Arc::clone(&gen_cache().read().unwrap().h_in_p[n])
}

pub fn e_in_p(n: usize) -> Arc<Terms> {
    ensure_generators(n);
    Arc::clone(&gen_cache().read().unwrap().e_in_p[n])
}

pub fn p_in_h(n: usize) -> Arc<Terms> {
    assert!(n >= 1, "p_0 is not a generator");
    ensure_generators(n);
    Arc::clone(&gen_cache().read().unwrap().p_in_h[n])
}

pub fn p_in_e(n: usize) -> Arc<Terms> {
    assert!(n >= 1, "p_0 is not a generator");
    ensure_generators(n);
    Arc::clone(&gen_cache().read().unwrap().p_in_e[n])
}

// ────────────────────────────────────────────────────────────────────
// Schur ↔ power sum
// ────────────────────────────────────────────────────────────────────

/// s_λ = Σ_{ρ ⊢ |λ|} χ^λ(ρ)/z_ρ · p_ρ
pub fn schur_in_p(lambda: &Partition) -> Terms {
    let table = char_table(lambda.size());
    let li = table.index_of(lambda).unwrap();
    let mut out = Terms::new();
    for (ci, class) in table.shapes.iter().enumerate() {
        let chi = table.values[li][ci];
        if chi != 0 {
            out.insert(class.clone(), Rat::new(BigInt::from(chi), z_of(class)));
        }
    }
    out
}

/// p_ρ = Σ_{λ ⊢ |ρ|} χ^λ(ρ) · s_λ
pub fn p_in_schur(rho: &Partition) -> Terms {
    let table = char_table(rho.size());
    let ci = table.index_of(rho).unwrap();
    let mut out = Terms::new();
    for (li, shape) in table.shapes.iter().enumerate() {
        let chi = table.values[li][ci];
        if chi != 0 {
            out.insert(shape.clone(), rat(chi));
        }
    }
    out
}

/// Expands a power-sum expression in the Schur basis.
pub fn p_terms_to_schur(terms: &Terms) -> Terms {
    let mut out = Terms::new();
    for (rho, c) in terms {
        add_scaled(&mut out, &p_in_schur(rho), c);
    }
    out
}

// ────────────────────────────────────────────────────────────────────
// Monomial basis
// ────────────────────────────────────────────────────────────────────

/// Per-degree matrices between the power-sum and monomial bases.
pub struct MonomialTables {
    pub degree: usize,
    pub shapes: Vec<Partition>,
    position: HashMap<Partition, usize>,
    /// row ρ: p_ρ = Σ_μ p_to_m[ρ][μ] · m_μ
    pub p_to_m: Vec<Vec<Rat>>,
    /// row μ: m_μ = Σ_ρ m_to_p[μ][ρ] · p_ρ
    pub m_to_p: Vec<Vec<Rat>>,
}

impl MonomialTables {
    pub fn index_of(&self, p: &Partition) -> Option<usize> {
        self.position.get(p).copied()
    }
}

/// Number of maps assigning the parts of ρ to the labeled parts of μ so
/// that every part of μ is exactly filled; this is [x^μ] p_ρ.
fn assignment_count(
    idx: usize,
    caps: &[usize],
    rho: &[usize],
    memo: &mut HashMap<(usize, Vec<usize>), BigInt>,
) -> BigInt {
    if idx == rho.len() {
        return if caps.iter().all(|&c| c == 0) { BigInt::one() } else { BigInt::zero() };
    }
    let key = (idx, caps.to_vec());
    if let Some(v) = memo.get(&key) {
        return v.clone();
    }
    let mut total = BigInt::zero();
    let mut tried: Vec<usize> = Vec::new();
    for pos in 0..caps.len() {
        let c = caps[pos];
        if c < rho[idx] || tried.contains(&c) {
            continue;
        }
        tried.push(c);
        let multiplicity = caps.iter().filter(|&&x| x == c).count();
        let mut next: Vec<usize> = caps.to_vec();
        next[pos] = c - rho[idx];
        next.sort_unstable_by(|a, b| b.cmp(a));
        total += BigInt::from(multiplicity) * assignment_count(idx + 1, &next, rho, memo);
    }
    memo.insert(key, total.clone());
    total
}

/// Gauss–Jordan inversion over exact rationals; panics on a singular input
/// (the transition matrices are unitriangular up to ordering, so never).
fn invert_matrix(m: &[Vec<Rat>]) -> Vec<Vec<Rat>> {
    let n = m.len();
    let mut a: Vec<Vec<Rat>> = m.to_vec();
    let mut inv: Vec<Vec<Rat>> = (0..n)
        .map(|i| (0..n).map(|j| if i == j { Rat::one() } else { Rat::zero() }).collect())
        .collect();
    for col in 0..n {
        let pivot =
            (col..n).find(|&r| !a[r][col].is_zero()).expect("transition matrix is singular");
        a.swap(col, pivot);
        inv.swap(col, pivot);
        let scale = a[col][col].recip();
        for j in 0..n {
            a[col][j] *= &scale;
            inv[col][j] *= &scale;
        }
        for row in 0..n {
            if row == col || a[row][col].is_zero() {
                continue;
            }
            let factor = a[row][col].clone();
            for j in 0..n {
                let x = &factor * &a[col][j];
                a[row][j] -= x;
                let y = &factor * &inv[col][j];
                inv[row][j] -= y;
            }
        }
    }
    inv
}

fn build_monomial_tables(n: usize) -> MonomialTables {
    let shapes: Vec<Partition> = partitions_of(n).collect();
    let position: HashMap<Partition, usize> =
        shapes.iter().enumerate().map(|(i, p)| (p.clone(), i)).collect();
    let p_to_m: Vec<Vec<Rat>> = shapes
        .iter()
        .map(|rho| {
            // the memo key (index, capacities) is only meaningful for a
            // fixed ρ, so the memo is per row
            let mut memo = HashMap::new();
            shapes
                .iter()
                .map(|mu| {
                    let count = assignment_count(0, mu.parts(), rho.parts(), &mut memo);
                    Rat::from_integer(count)
                })
                .collect()
        })
        .collect();
    let m_to_p = invert_matrix(&p_to_m);
    MonomialTables { degree: n, shapes, position, p_to_m, m_to_p }
}

type MonomialCache = RwLock<HashMap<usize, Arc<MonomialTables>>>;

fn monomial_cache() -> &'static MonomialCache {
    static CACHE: OnceLock<MonomialCache> = OnceLock::new();
    CACHE.get_or_init(|| RwLock::new(HashMap::new()))
}

pub fn monomial_tables(n: usize) -> Arc<MonomialTables> {
    if let Some(t) = monomial_cache().read().unwrap().get(&n) {
        return Arc::clone(t);
    }
    let table = Arc::new(build_monomial_tables(n));
    let mut guard = monomial_cache().write().unwrap();
    Arc::clone(guard.entry(n).or_insert(table))
}

// ────────────────────────────────────────────────────────────────────
// Littlewood–Richardson cache
// ────────────────────────────────────────────────────────────────────

type LrCache = RwLock<HashMap<(Partition, Partition), Arc<Terms>>>;

fn lr_cache() -> &'static LrCache {
    static CACHE: OnceLock<LrCache> = OnceLock::new();
    CACHE.get_or_init(|| RwLock::new(HashMap::new()))
}

/// s_a · s_b in the Schur basis, computed through the power-sum basis and
/// cached. Coefficients are the Littlewood–Richardson numbers.
pub fn lr_product(a: &Partition, b: &Partition) -> Arc<Terms> {
    let key = if a <= b { (a.clone(), b.clone()) } else { (b.clone(), a.clone()) };
    if let Some(t) = lr_cache().read().unwrap().get(&key) {
        return Arc::clone(t);
    }
    let prod = term_product(&schur_in_p(a), &schur_in_p(b));
    let schur = p_terms_to_schur(&prod);
    debug_assert!(
        schur.values().all(|c| c.is_integer() && !c.is_negative()),
        "LR coefficients must be nonnegative integers"
    );
    let result = Arc::new(schur);
    let mut guard = lr_cache().write().unwrap();
    Arc::clone(guard.entry(key).or_insert(result))
}

// ────────────────────────────────────────────────────────────────────
// Cache snapshots (for optional on-disk persistence)
// ────────────────────────────────────────────────────────────────────

pub(crate) fn snapshot_char_tables() -> Vec<(usize, Vec<Vec<i64>>)> {
    let guard = char_cache().read().unwrap();
    let mut out: Vec<(usize, Vec<Vec<i64>>)> =
        guard.iter().map(|(&n, t)| (n, t.values.clone())).collect();
    out.sort_by_key(|&(n, _)| n);
    out
}

/// Installs a previously snapshotted table. The shape/class ordering is the
/// canonical reverse-lexicographic one; dimension mismatches are rejected.
pub(crate) fn install_char_table(n: usize, values: Vec<Vec<i64>>) -> bool {
    let shapes: Vec<Partition> = partitions_of(n).collect();
    if values.len() != shapes.len() || values.iter().any(|row| row.len() != shapes.len()) {
        return false;
    }
    let position = shapes.iter().enumerate().map(|(i, p)| (p.clone(), i)).collect();
    let table = Arc::new(CharTable { degree: n, shapes, position, values });
    char_cache().write().unwrap().entry(n).or_insert(table);
    true
}

pub(crate) type RatMatrix = Vec<Vec<Rat>>;

pub(crate) fn snapshot_monomial_tables() -> Vec<(usize, RatMatrix, RatMatrix)> {
    let guard = monomial_cache().read().unwrap();
    let mut out: Vec<(usize, RatMatrix, RatMatrix)> =
        guard.iter().map(|(&n, t)| (n, t.p_to_m.clone(), t.m_to_p.clone())).collect();
    out.sort_by_key(|&(n, _, _)| n);
    out
}

pub(crate) fn install_monomial_tables(n: usize, p_to_m: RatMatrix, m_to_p: RatMatrix) -> bool {
    let shapes: Vec<Partition> = partitions_of(n).collect();
    let dim = shapes.len();
    let square = |m: &RatMatrix| m.len() == dim && m.iter().all(|r| r.len() == dim);
    if !square(&p_to_m) || !square(&m_to_p) {
        return false;
    }
    let position = shapes.iter().enumerate().map(|(i, p)| (p.clone(), i)).collect();
    let table = Arc::new(MonomialTables { degree: n, shapes, position, p_to_m, m_to_p });
    monomial_cache().write().unwrap().entry(n).or_insert(table);
    true
}
