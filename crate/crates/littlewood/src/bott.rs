//! The Bott rule for weights of the form (n − |λ|, λ): the sorting degree
//! δ_n(λ) and the sorted partition λ[n].

use crate::partition::Partition;

/// Outcome of the Bott rule. δ = ∞ is the `Undefined` variant; it is never
/// encoded as a sentinel integer.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum BottResult {
    Defined { result: Partition, delta: usize },
    Undefined,
}

impl BottResult {
    pub fn is_defined(&self) -> bool {
        matches!(self, BottResult::Defined { .. })
    }

    /// (λ[n], δ_n(λ)) when defined.
    pub fn defined(&self) -> Option<(&Partition, usize)> {
        match self {
            BottResult::Defined { result, delta } => Some((result, *delta)),
            BottResult::Undefined => None,
        }
    }
}

/// Runs the rule with the smallest admissible vector length, r = l(λ) + 1.
/// The outcome is independent of r; see [`bott_with_r`].
pub fn bott(lambda: &Partition, n: i64) -> BottResult {
    bott_with_r(lambda, n, lambda.len() + 1)
}

/// The rule with an explicit vector length r ≥ l(λ) + 1: form
/// v = (n − |λ|, λ_1, …, λ_{r−1}), add the Weyl vector ρ = (r−1, …, 0),
/// sort; a repeated entry or a negative entry of w(v+ρ) − ρ gives
/// `Undefined`, otherwise the sorted partition and the inversion count of
/// the sorting permutation.
pub fn bott_with_r(lambda: &Partition, n: i64, r: usize) -> BottResult {
    assert!(r > lambda.len(), "bott requires r >= l(lambda) + 1: r = {r}, l = {}", lambda.len());
    let size = lambda.size() as i64;
    let mut shifted: Vec<i64> = Vec::with_capacity(r);
    // v_1 + ρ_1
    shifted.push(n - size + (r as i64 - 1));
    // v_{i+1} + ρ_{i+1} = λ_i + (r − 1 − i)
    for i in 1..r {
        shifted.push(lambda.part(i) as i64 + (r as i64 - 1 - i as i64));
    }

    for a in 0..r {
        for b in a + 1..r {
            if shifted[a] == shifted[b] {
                return BottResult::Undefined;
            }
        }
    }
    // entries are distinct, so l(w) is the number of out-of-order pairs
    let delta = (0..r)
        .flat_map(|a| (a + 1..r).map(move |b| (a, b)))
        .filter(|&(a, b)| shifted[a] < shifted[b])
        .count();

    let mut sorted = shifted;
    sorted.sort_unstable_by(|a, b| b.cmp(a));
    let mut parts = Vec::with_capacity(r);
    for (idx, &e) in sorted.iter().enumerate() {
        let part = e - (r as i64 - 1 - idx as i64);
        if part < 0 {
            return BottResult::Undefined;
        }
        parts.push(part as usize);
    }
    let result = Partition::new(parts).expect("sorted dominant weight is a partition");
    debug_assert_eq!(result.size() as i64, n);
    BottResult::Defined { result, delta }
}

/// The counting shortcut for the degree: #{i ≥ 1 : λ_i − i > n − |λ|}.
///
/// This is a cross-check only; it does not detect the `Undefined` cases,
/// for which [`bott`] is authoritative.
pub fn delta_count(lambda: &Partition, n: i64) -> usize {
    let size = lambda.size() as i64;
    let threshold = n - size;
    // beyond l(λ) the condition −i > n − |λ| holds only for i < |λ| − n
    let bound = lambda.len().max((size - n).max(0) as usize) + 1;
    (1..=bound).filter(|&i| lambda.part(i) as i64 - i as i64 > threshold).count()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bott_examples() {
        assert_eq!(
            bott(&Partition::of(&[2, 1]), 10),
            BottResult::Defined { result: Partition::of(&[7, 2, 1]), delta: 0 }
        );
        assert_eq!(
            bott(&Partition::of(&[1]), 0),
            BottResult::Defined { result: Partition::empty(), delta: 1 }
        );
        assert_eq!(bott(&Partition::of(&[1]), 1), BottResult::Undefined);
        assert_eq!(
            bott(&Partition::of(&[2]), 2),
            BottResult::Defined { result: Partition::of(&[1, 1]), delta: 1 }
        );
        assert_eq!(bott(&Partition::of(&[3]), 1), BottResult::Undefined);
    }

    #[test]
    fn bott_empty_lambda() {
        assert_eq!(
            bott(&Partition::empty(), 4),
            BottResult::Defined { result: Partition::of(&[4]), delta: 0 }
        );
        assert_eq!(
            bott(&Partition::empty(), 0),
            BottResult::Defined { result: Partition::empty(), delta: 0 }
        );
    }

    #[test]
    fn bott_negative_n() {
        assert_eq!(bott(&Partition::empty(), -1), BottResult::Undefined);
        assert_eq!(bott(&Partition::of(&[2, 1]), -2), BottResult::Undefined);
    }

    #[test]
    fn delta_count_examples() {
        assert_eq!(delta_count(&Partition::of(&[1]), 0), 1);
        assert_eq!(delta_count(&Partition::of(&[2, 1]), 10), 0);
        assert_eq!(delta_count(&Partition::of(&[2]), 2), 1);
    }
}
