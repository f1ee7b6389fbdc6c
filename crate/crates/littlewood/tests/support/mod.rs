//! Independent oracles for the integration tests. Everything here is
//! deliberately computed by a different route than the library uses:
//! strip enumeration by skew-shape search instead of beta sets, the
//! pentagonal recurrence instead of direct enumeration, dimensions by
//! corner recursion and by hook content, and Schur coefficients recovered
//! from character values by exact linear algebra.

#![allow(dead_code)]

use std::collections::{BTreeSet, HashMap, VecDeque};

use littlewood::{mn_character, partitions_of, rat, CycleType, Partition, Rat};

/// Number of partitions of n by Euler's pentagonal number recurrence.
pub fn partition_count(n: usize) -> u64 {
    let mut p = vec![0i64; n + 1];
    p[0] = 1;
    for m in 1..=n {
        let mut total = 0i64;
        let mut k = 1i64;
        loop {
            let g1 = k * (3 * k - 1) / 2;
            let g2 = k * (3 * k + 1) / 2;
            if g1 as usize > m {
                break;
            }
            let sign = if k % 2 == 0 { -1 } else { 1 };
            total += sign * p[m - g1 as usize];
            if g2 as usize <= m {
                total += sign * p[m - g2 as usize];
            }
            k += 1;
        }
        p[m] = total;
    }
    p[n] as u64
}

/// All partitions contained in `lambda` with the given size.
fn subshapes_of_size(lambda: &Partition, size: usize) -> Vec<Partition> {
    partitions_of(size).filter(|mu| lambda.contains(mu)).collect()
}

/// Border-strip removals of size p from lambda found by brute skew-shape
/// search: every subshape whose complement is edge-connected and contains
/// no 2x2 block. Returns (remaining partition, height) sorted by the
/// remaining partition.
pub fn strips_by_shape_search(lambda: &Partition, p: usize) -> Vec<(Partition, usize)> {
    let mut found = Vec::new();
    if p == 0 || p > lambda.size() {
        return found;
    }
    let cells: BTreeSet<(usize, usize)> = lambda.cells().collect();
    for mu in subshapes_of_size(lambda, lambda.size() - p) {
        let inner: BTreeSet<(usize, usize)> = mu.cells().collect();
        let skew: BTreeSet<(usize, usize)> = cells.difference(&inner).cloned().collect();
        if !is_connected(&skew) || has_square(&skew) {
            continue;
        }
        let rows: BTreeSet<usize> = skew.iter().map(|&(r, _)| r).collect();
        found.push((mu, rows.len() - 1));
    }
    found.sort_by(|a, b| a.0.cmp(&b.0));
    found
}

fn is_connected(cells: &BTreeSet<(usize, usize)>) -> bool {
    let Some(&start) = cells.iter().next() else {
        return false;
    };
    let mut seen = BTreeSet::new();
    seen.insert(start);
    let mut queue = VecDeque::from([start]);
    while let Some((r, c)) = queue.pop_front() {
        let mut neighbors = vec![(r + 1, c), (r, c + 1)];
        if r > 1 {
            neighbors.push((r - 1, c));
        }
        if c > 1 {
            neighbors.push((r, c - 1));
        }
        for n in neighbors {
            if cells.contains(&n) && seen.insert(n) {
                queue.push_back(n);
            }
        }
    }
    seen.len() == cells.len()
}

fn has_square(cells: &BTreeSet<(usize, usize)>) -> bool {
    cells.iter().any(|&(r, c)| {
        cells.contains(&(r + 1, c))
            && cells.contains(&(r, c + 1))
            && cells.contains(&(r + 1, c + 1))
    })
}

/// Dimension of the irreducible indexed by lambda via the corner-removal
/// recursion f(lambda) = sum of f over one-cell-smaller shapes, counting
/// standard tableaux by their last entry.
pub fn dim_by_corner_recursion(lambda: &Partition, memo: &mut HashMap<Partition, u64>) -> u64 {
    if lambda.is_empty() {
        return 1;
    }
    if let Some(&d) = memo.get(lambda) {
        return d;
    }
    let mut total = 0;
    for i in 1..=lambda.len() {
        if lambda.part(i) > lambda.part(i + 1) {
            let mut parts: Vec<usize> = lambda.parts().to_vec();
            parts[i - 1] -= 1;
            let smaller = Partition::new(parts).expect("corner removal keeps a partition");
            total += dim_by_corner_recursion(&smaller, memo);
        }
    }
    memo.insert(lambda.clone(), total);
    total
}

/// Dimension of the GL_n representation indexed by mu via the hook content
/// formula: product over cells of (n + col - row) / hook length.
pub fn hook_content_dim(mu: &Partition, n: usize) -> u64 {
    let conj = mu.conjugate();
    let mut value = rat(1);
    for (i, j) in mu.cells() {
        let content = n as i64 + j as i64 - i as i64;
        let hook = (mu.part(i) - j + conj.part(j) - i + 1) as i64;
        value *= rat(content) / rat(hook);
    }
    assert!(value.is_integer(), "hook content formula must give an integer");
    let n = value.to_integer();
    u64::try_from(n).expect("hook content dimension must be nonnegative and fit u64")
}

/// Moebius function by trial division.
pub fn moebius(n: usize) -> i64 {
    let mut n = n;
    let mut primes = 0;
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            n /= d;
            if n.is_multiple_of(d) {
                return 0;
            }
            primes += 1;
        }
        d += 1;
    }
    if n > 1 {
        primes += 1;
    }
    if primes % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Primitive necklaces of length m over an alphabet of `letters` symbols:
/// (1/m) sum over d | m of moebius(d) letters^(m/d).
pub fn necklace_count(letters: u64, m: usize) -> Rat {
    let mut total = rat(0);
    for d in 1..=m {
        if m.is_multiple_of(d) {
            let power = (letters as i64).pow((m / d) as u32);
            total += rat(moebius(d)) * rat(power);
        }
    }
    total / rat(m as i64)
}

/// Order of the centralizer of a permutation of this cycle type: the
/// product over distinct part values m appearing a times of m^a * a!.
pub fn centralizer_order(kappa: &Partition) -> i64 {
    let mut z = 1i64;
    let mut i = 0;
    let parts = kappa.parts();
    while i < parts.len() {
        let value = parts[i];
        let mut count = 0i64;
        while i < parts.len() && parts[i] == value {
            count += 1;
            i += 1;
        }
        for _ in 0..count {
            z *= value as i64;
        }
        let mut fact = 1i64;
        for a in 1..=count {
            fact *= a;
        }
        z *= fact;
    }
    z
}

/// Value of the power sum p_k at the eigenvalues of a permutation of cycle
/// type rho: each m-cycle contributes its full set of m-th roots of unity,
/// which sum to m on powers divisible by m and to 0 otherwise.
pub fn power_eval(k: usize, rho: &Partition) -> i64 {
    rho.parts().iter().filter(|&&m| k.is_multiple_of(m)).map(|&m| m as i64).sum()
}

/// Stable evaluation of the Schur function s_mu at the eigenvalues of a
/// permutation of cycle type rho, through the character expansion
/// sum over kappa of chi^mu(kappa)/z_kappa * p_kappa(rho).
pub fn schur_eval(mu: &Partition, rho: &Partition) -> Rat {
    let mut total = rat(0);
    for kappa in partitions_of(mu.size()) {
        let chi = mn_character(mu, &CycleType::new(kappa.clone()));
        if chi == 0 {
            continue;
        }
        let mut product = rat(chi);
        for &k in kappa.parts() {
            product *= rat(power_eval(k, rho));
        }
        total += product / rat(centralizer_order(&kappa));
    }
    total
}

/// Solves the overdetermined exact linear system rows * x = rhs by
/// Gauss-Jordan elimination. Returns None unless the system has full
/// column rank and every surplus equation is consistent.
pub fn solve_exact(mut rows: Vec<Vec<Rat>>, mut rhs: Vec<Rat>) -> Option<Vec<Rat>> {
    let m = rows.len();
    let k = rows.first()?.len();
    if m < k {
        return None;
    }
    let mut pivot = 0;
    for col in 0..k {
        let found = (pivot..m).find(|&r| rows[r][col] != rat(0))?;
        rows.swap(pivot, found);
        rhs.swap(pivot, found);
        let inv = rows[pivot][col].clone();
        for cell in &mut rows[pivot][col..k] {
            *cell = cell.clone() / inv.clone();
        }
        rhs[pivot] = rhs[pivot].clone() / inv;
        let prow = rows[pivot].clone();
        let pval = rhs[pivot].clone();
        for r in 0..m {
            if r == pivot || rows[r][col] == rat(0) {
                continue;
            }
            let factor = rows[r][col].clone();
            for c in col..k {
                let v = rows[r][c].clone() - factor.clone() * prow[c].clone();
                rows[r][c] = v;
            }
            rhs[r] = rhs[r].clone() - factor * pval.clone();
        }
        pivot += 1;
    }
    if rhs[pivot..m].iter().any(|v| *v != rat(0)) {
        return None;
    }
    Some(rhs[..k].to_vec())
}

/// Recovers the Schur coefficients of the stable Specht polynomial of
/// lambda purely from character values: for every rank n from
/// |lambda| + lambda_1 up to n_max (where the placement is untwisted) and
/// every class rho of n, the polynomial must evaluate to the character of
/// the padded shape (n - |lambda|, lambda). The unknowns are the
/// coefficients of s_mu over all |mu| <= |lambda|.
pub fn stable_coefficients_from_characters(
    lambda: &Partition,
    n_max: usize,
) -> Option<Vec<(Partition, Rat)>> {
    let unknowns: Vec<Partition> = (0..=lambda.size()).flat_map(partitions_of).collect();
    let n_min = lambda.size() + lambda.part(1);
    assert!(n_min <= n_max, "need at least one untwisted rank");
    let mut rows = Vec::new();
    let mut rhs = Vec::new();
    for n in n_min..=n_max {
        let mut padded: Vec<usize> = vec![n - lambda.size()];
        padded.extend_from_slice(lambda.parts());
        let shape = Partition::new(padded).expect("padded shape is a partition");
        for rho in partitions_of(n) {
            rows.push(unknowns.iter().map(|mu| schur_eval(mu, &rho)).collect());
            rhs.push(rat(mn_character(&shape, &CycleType::new(rho.clone()))));
        }
    }
    let solution = solve_exact(rows, rhs)?;
    Some(unknowns.into_iter().zip(solution).collect())
}
