//! Partitions, duals, dominance, and the Spaltenstein map.
//!
//! Partitions are stored dense, weakly decreasing and zero-free; reading a
//! part past the stored length yields 0, which is what the index formulas
//! below rely on (they reference indices possibly past the end).
//!
//! Throughout, `eps` distinguishes the orthogonal (`eps = 0`) from the
//! symplectic (`eps = 1`) world: `P_eps(n)` is the set of Jordan types of
//! nilpotent elements of `so_n` / `sp_n`, `Pai(n, q)` the set of partitions
//! with the first `q` parts odd and the rest even (`q != 2` in the
//! orthogonal case), and the Spaltenstein map `S : Pai(n, q) -> P_eps(n)`
//! translates polarization types into Jordan types.

use alloc::vec::Vec;
use core::fmt;
use core::ops::Index;

use crate::error::Error;

/// Parity marker for the two families of bilinear forms.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Epsilon {
    /// `so(V)`: symmetric form, `eps = 0`.
    Orthogonal,
    /// `sp(V)`: antisymmetric form, `eps = 1`.
    Symplectic,
}

impl Epsilon {
    /// The residue the definitions compare against: 0 or 1.
    pub fn parity(self) -> usize {
        match self {
            Epsilon::Orthogonal => 0,
            Epsilon::Symplectic => 1,
        }
    }
}

/// A weakly decreasing sequence of positive integers.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Builds a partition from an arbitrary integer sequence: sorts
    /// descending, drops zeros, rejects negative entries and empty input.
    pub fn new(parts: &[i64]) -> Result<Self, Error> {
        if let Some(&v) = parts.iter().find(|&&v| v < 0) {
            return Err(Error::NegativePart(v));
        }
        let mut parts: Vec<usize> = parts
            .iter()
            .map(|&v| v as usize)
            .filter(|&v| v > 0)
            .collect();
        if parts.is_empty() {
            return Err(Error::EmptyPartition);
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Ok(Partition { parts })
    }

    /// Builds a partition from parts already known to be positive,
    /// re-sorting as needed.
    pub fn from_parts(parts: impl IntoIterator<Item = usize>) -> Result<Self, Error> {
        let mut parts: Vec<usize> = parts.into_iter().filter(|&v| v > 0).collect();
        if parts.is_empty() {
            return Err(Error::EmptyPartition);
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Ok(Partition { parts })
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// The partitioned total `n`.
    pub fn total(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Number of (positive) parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// The part at 1-based index `j`, reading 0 past the end.
    pub fn part(&self, j: usize) -> usize {
        if j == 0 || j > self.parts.len() {
            0
        } else {
            self.parts[j - 1]
        }
    }

    /// Number of parts equal to `v`.
    pub fn multiplicity(&self, v: usize) -> usize {
        self.parts.iter().filter(|&&p| p == v).count()
    }

    /// The dual (transpose) partition: `dual_i = #{j : d_j >= i}`.
    pub fn dual(&self) -> Partition {
        let cols = self.parts[0];
        let parts = (1..=cols)
            .map(|i| self.parts.iter().filter(|&&p| p >= i).count())
            .collect();
        Partition { parts }
    }

    /// Dominance order: `self >= other` iff every prefix sum of `self` is
    /// at least the corresponding prefix sum of `other`. Both partitions
    /// must partition the same total.
    pub fn dominates(&self, other: &Partition) -> Result<bool, Error> {
        let (n, m) = (self.total(), other.total());
        if n != m {
            return Err(Error::SizeMismatch { left: n, right: m });
        }
        let len = self.len().max(other.len());
        let (mut a, mut b) = (0usize, 0usize);
        for j in 1..=len {
            a += self.part(j);
            b += other.part(j);
            if a < b {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Strict dominance: dominates and differs.
    pub fn dominates_strictly(&self, other: &Partition) -> Result<bool, Error> {
        Ok(self.dominates(other)? && self != other)
    }
}

impl Index<usize> for Partition {
    type Output = usize;

    // 0-based; out-of-range reads 0.
    fn index(&self, index: usize) -> &usize {
        self.parts.get(index).unwrap_or(&0)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", p)?;
        }
        write!(f, "]")
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// `ord(p)`: the partition `e` with `e_i = #{j : p_j >= i}`.
///
/// Equals the dual of the sorted positive entries of `p`; zeros in the
/// input are allowed and ignored, an all-zero input is rejected.
pub fn ord(seq: &[usize]) -> Result<Partition, Error> {
    let max = *seq.iter().max().unwrap_or(&0);
    if max == 0 {
        return Err(Error::ZeroSequence);
    }
    let parts = (1..=max)
        .map(|i| seq.iter().filter(|&&p| p >= i).count())
        .collect();
    Ok(Partition { parts })
}

/// Membership in `P_eps(n)`: for every `l` with `l ≡ eps (mod 2)`, the
/// multiplicity of `l` must be even. These are exactly the Jordan types of
/// nilpotent elements of `so_n` (eps 0) resp. `sp_n` (eps 1).
pub fn in_p_epsilon(d: &Partition, eps: Epsilon) -> bool {
    let parity = eps.parity();
    let mut l = if parity == 0 { 2 } else { 1 };
    let top = d.part(1);
    while l <= top {
        if !d.multiplicity(l).is_multiple_of(2) {
            return false;
        }
        l += 2;
    }
    true
}

/// Membership in `Pai(n, q)`: `e` partitions `n`, `e_i` is odd for
/// `i <= q` and even for `i > q`, and `q != 2` when `eps = 0`.
pub fn in_pai(e: &Partition, n: usize, q: usize, eps: Epsilon) -> bool {
    if e.total() != n {
        return false;
    }
    if eps == Epsilon::Orthogonal && q == 2 {
        return false;
    }
    let span = e.len().max(q);
    (1..=span).all(|i| e.part(i) % 2 == if i <= q { 1 } else { 0 })
}

/// The unique `q` with `e` in `Pai(e.total(), q)` ignoring the `q != 2`
/// clause: the odd parts must form a prefix, and `q` is their count.
pub fn pai_profile(e: &Partition) -> Option<usize> {
    let q = e.parts.iter().take_while(|&&p| p % 2 == 1).count();
    if e.parts[q..].iter().all(|&p| p % 2 == 0) {
        Some(q)
    } else {
        None
    }
}

/// The admissible `q` with `e` in `Pai(n, q)`, if any.
pub fn pai_parameter(e: &Partition, eps: Epsilon) -> Option<usize> {
    let q = pai_profile(e)?;
    if eps == Epsilon::Orthogonal && q == 2 {
        None
    } else {
        Some(q)
    }
}

/// The index set `I(e) = {j : j ≡ n+1 (mod 2), e_j ≡ eps (mod 2),
/// e_j >= e_{j+1} + 2}`, with `e_{j+1}` reading 0 past the end.
/// Returned 1-based in increasing order.
pub fn index_set(e: &Partition, n: usize, eps: Epsilon) -> Vec<usize> {
    let parity = eps.parity();
    (1..=e.len())
        .filter(|&j| {
            j % 2 == (n + 1) % 2 && e.part(j) % 2 == parity && e.part(j) >= e.part(j + 1) + 2
        })
        .collect()
}

/// The Spaltenstein map `S : Pai(n, q) -> P_eps(n)`:
/// `S(e)_j = e_j - 1` if `j` is in `I(e)`, `e_j + 1` if `j - 1` is in
/// `I(e)`, and `e_j` otherwise.
///
/// Rejects `e` lying in no admissible `Pai(n, q)`.
pub fn spaltenstein(e: &Partition, eps: Epsilon) -> Result<Partition, Error> {
    if pai_parameter(e, eps).is_none() {
        return Err(Error::NotInPai);
    }
    let n = e.total();
    let idx = index_set(e, n, eps);
    let in_idx = |j: usize| idx.binary_search(&j).is_ok();
    // j - 1 in I(e) can create a new part one past the end.
    let span = e.len() + 1;
    let mut parts: Vec<usize> = (1..=span)
        .map(|j| {
            if in_idx(j) {
                e.part(j) - 1
            } else if j >= 2 && in_idx(j - 1) {
                e.part(j) + 1
            } else {
                e.part(j)
            }
        })
        .collect();
    parts.retain(|&p| p > 0);
    parts.sort_unstable_by(|a, b| b.cmp(a));
    let image = Partition { parts };
    debug_assert_eq!(image.total(), n);
    Ok(image)
}

/// All pairs `(e, q)` with `e` in `Pai(n, q)` admissible and `S(e) = d`,
/// found by exhaustive search over the partitions of `n`, in lexicographic
/// order on `e`.
///
/// Rejects `d` outside `P_eps(n)`: only Jordan types have polarization
/// types.
pub fn spaltenstein_fiber(d: &Partition, eps: Epsilon) -> Result<Vec<(Partition, usize)>, Error> {
    if !in_p_epsilon(d, eps) {
        return Err(Error::NotAJordanType {
            algebra: alloc::format!("eps = {}", eps.parity()),
        });
    }
    let n = d.total();
    let mut fiber = Vec::new();
    for e in partitions_of(n) {
        if let Some(q) = pai_parameter(&e, eps) {
            if spaltenstein(&e, eps).as_ref() == Ok(d) {
                fiber.push((e, q));
            }
        }
    }
    fiber.sort_by(|a, b| a.0.parts.cmp(&b.0.parts));
    Ok(fiber)
}

/// All partitions of `n >= 1`, in descending lexicographic order
/// (`[n]` first, `[1^n]` last).
pub fn partitions_of(n: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    fn rec(remaining: usize, max: usize, current: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition {
                parts: current.clone(),
            });
            return;
        }
        let mut p = remaining.min(max);
        while p >= 1 {
            current.push(p);
            rec(remaining - p, p, current, out);
            current.pop();
            p -= 1;
        }
    }
    if n > 0 {
        rec(n, n, &mut current, &mut out);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::from_parts(parts.iter().copied()).unwrap()
    }

    #[test]
    fn new_sorts_and_drops_zeros() {
        assert_eq!(Partition::new(&[1, 2, 3]).unwrap().parts(), &[3, 2, 1]);
        assert_eq!(Partition::new(&[2, 0, 2, 1]).unwrap().parts(), &[2, 2, 1]);
        assert_eq!(Partition::new(&[2, 0, 2, 1]).unwrap().total(), 5);
    }

    #[test]
    fn new_rejects_bad_input() {
        assert_eq!(Partition::new(&[3, -1]), Err(Error::NegativePart(-1)));
        assert_eq!(Partition::new(&[]), Err(Error::EmptyPartition));
        assert_eq!(Partition::new(&[0, 0]), Err(Error::EmptyPartition));
    }

    #[test]
    fn dual_examples() {
        assert_eq!(p(&[3, 2, 1]).dual(), p(&[3, 2, 1]));
        assert_eq!(p(&[6]).dual(), p(&[1, 1, 1, 1, 1, 1]));
        assert_eq!(p(&[2, 2, 1]).dual(), p(&[3, 2]));
    }

    #[test]
    fn dual_is_involutive_up_to_30() {
        for n in 1..=30 {
            for d in partitions_of(n) {
                assert_eq!(d.dual().dual(), d, "dual not involutive at {}", d);
            }
        }
    }

    #[test]
    fn ord_examples() {
        assert_eq!(ord(&[3, 2, 0, 2, 3]).unwrap(), p(&[4, 4, 2]));
        // Flag (k, n-k) of a two-column orbit, k = 2, n = 7.
        assert_eq!(ord(&[2, 5]).unwrap(), p(&[2, 2, 1, 1, 1]));
        assert_eq!(ord(&[5]).unwrap(), p(&[1, 1, 1, 1, 1]));
        assert_eq!(ord(&[0, 0]), Err(Error::ZeroSequence));
    }

    #[test]
    fn dominance_examples() {
        assert!(p(&[3, 2, 1]).dominates(&p(&[3, 1, 1, 1])).unwrap());
        assert!(!p(&[2, 2, 2]).dominates(&p(&[3, 2, 1])).unwrap());
        assert!(p(&[3, 2, 1]).dominates(&p(&[3, 2, 1])).unwrap());
        assert!(matches!(
            p(&[2]).dominates(&p(&[1])),
            Err(Error::SizeMismatch { .. })
        ));
    }

    #[test]
    fn dominance_is_a_partial_order() {
        for n in 1..=12 {
            let all = partitions_of(n);
            for a in &all {
                assert!(a.dominates(a).unwrap());
            }
            for a in &all {
                for b in &all {
                    let ab = a.dominates(b).unwrap();
                    let ba = b.dominates(a).unwrap();
                    if ab && ba {
                        assert_eq!(a, b);
                    }
                    if n <= 8 {
                        for c in &all {
                            if ab && b.dominates(c).unwrap() {
                                assert!(a.dominates(c).unwrap());
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn p_epsilon_examples() {
        assert!(in_p_epsilon(&p(&[4, 4, 1, 1]), Epsilon::Orthogonal));
        assert!(!in_p_epsilon(&p(&[3, 2, 1]), Epsilon::Orthogonal));
        assert!(in_p_epsilon(&p(&[1, 1, 1, 1]), Epsilon::Symplectic));
        assert!(!in_p_epsilon(&p(&[3, 1]), Epsilon::Symplectic));
        assert!(in_p_epsilon(&p(&[2, 2]), Epsilon::Orthogonal));
    }

    #[test]
    fn pai_examples() {
        assert!(in_pai(&p(&[4, 4, 2]), 10, 0, Epsilon::Orthogonal));
        // q = 2 is excluded in the orthogonal case.
        assert!(!in_pai(&p(&[3, 3, 2, 2]), 10, 2, Epsilon::Orthogonal));
        assert!(in_pai(&p(&[3, 3, 2, 2]), 10, 2, Epsilon::Symplectic));
        assert!(!in_pai(&p(&[2]), 2, 1, Epsilon::Symplectic));
        assert!(!in_pai(&p(&[4, 4, 2]), 9, 0, Epsilon::Orthogonal));
        // q beyond the part count demands odd parts that read as 0.
        assert!(!in_pai(&p(&[3, 1]), 4, 3, Epsilon::Symplectic));
    }

    #[test]
    fn index_set_examples() {
        assert_eq!(index_set(&p(&[4, 4, 2]), 10, Epsilon::Orthogonal), vec![3]);
        assert_eq!(
            index_set(&p(&[4, 2, 2, 2]), 10, Epsilon::Orthogonal),
            vec![1]
        );
        // Boundary case: the gap condition fails at j = 1, so I is empty.
        assert_eq!(
            index_set(&p(&[1, 1]), 2, Epsilon::Symplectic),
            Vec::<usize>::new()
        );
        assert_eq!(index_set(&p(&[2]), 2, Epsilon::Orthogonal), vec![1]);
    }

    #[test]
    fn spaltenstein_examples() {
        let s = spaltenstein(&p(&[4, 4, 2]), Epsilon::Orthogonal).unwrap();
        assert_eq!(s, p(&[4, 4, 1, 1]));
        let s = spaltenstein(&p(&[4, 2, 2, 2]), Epsilon::Orthogonal).unwrap();
        assert_eq!(s, p(&[3, 3, 2, 2]));
        // Empty index set leaves e unchanged.
        assert_eq!(
            spaltenstein(&p(&[3, 1, 1]), Epsilon::Orthogonal).unwrap(),
            p(&[3, 1, 1])
        );
        assert_eq!(
            spaltenstein(&p(&[2, 1]), Epsilon::Orthogonal),
            Err(Error::NotInPai)
        );
        // [3,3,2,2] has profile q = 2, inadmissible for eps = 0.
        assert_eq!(
            spaltenstein(&p(&[3, 3, 2, 2]), Epsilon::Orthogonal),
            Err(Error::NotInPai)
        );
    }

    #[test]
    fn spaltenstein_codomain_sweep() {
        // S maps every admissible Pai(n, q) into P_eps(n), preserving n.
        // The symplectic side only exists for even n.
        for eps in [Epsilon::Orthogonal, Epsilon::Symplectic] {
            for n in 1..=14 {
                if eps == Epsilon::Symplectic && n % 2 != 0 {
                    continue;
                }
                for e in partitions_of(n) {
                    if pai_parameter(&e, eps).is_some() {
                        let s = spaltenstein(&e, eps).unwrap();
                        assert_eq!(s.total(), n);
                        assert!(in_p_epsilon(&s, eps), "S({}) = {} not in P_eps", e, s);
                    }
                }
            }
        }
    }

    #[test]
    fn fiber_examples() {
        let fiber = spaltenstein_fiber(&p(&[4, 4, 1, 1]), Epsilon::Orthogonal).unwrap();
        assert_eq!(fiber, vec![(p(&[4, 4, 2]), 0)]);

        let fiber = spaltenstein_fiber(&p(&[1, 1]), Epsilon::Symplectic).unwrap();
        assert_eq!(fiber, vec![(p(&[1, 1]), 2)]);

        // [2] is not in P_0(2): multiplicity of the even part 2 is odd.
        assert!(matches!(
            spaltenstein_fiber(&p(&[2]), Epsilon::Orthogonal),
            Err(Error::NotAJordanType { .. })
        ));
    }

    #[test]
    fn fiber_round_trip() {
        for eps in [Epsilon::Orthogonal, Epsilon::Symplectic] {
            for n in 1..=12 {
                for d in partitions_of(n) {
                    if !in_p_epsilon(&d, eps) {
                        continue;
                    }
                    for (e, q) in spaltenstein_fiber(&d, eps).unwrap() {
                        assert!(in_pai(&e, n, q, eps));
                        assert_eq!(spaltenstein(&e, eps).unwrap(), d);
                    }
                }
            }
        }
    }

    #[test]
    fn fiber_elements_form_a_dominance_chain() {
        // Fiber elements differ from d by prefix-sum excesses supported on
        // their index patterns, so they are totally ordered by dominance.
        // The polarization enumeration relies on the minimum being unique.
        for eps in [Epsilon::Orthogonal, Epsilon::Symplectic] {
            for n in 1..=14 {
                for d in partitions_of(n) {
                    if !in_p_epsilon(&d, eps) {
                        continue;
                    }
                    let fiber = spaltenstein_fiber(&d, eps).unwrap();
                    for (a, _) in &fiber {
                        for (b, _) in &fiber {
                            assert!(
                                a.dominates(b).unwrap() || b.dominates(a).unwrap(),
                                "incomparable fiber elements {} and {} over {}",
                                a,
                                b,
                                d
                            );
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn partitions_of_counts() {
        assert_eq!(partitions_of(0).len(), 0);
        assert_eq!(partitions_of(1).len(), 1);
        assert_eq!(partitions_of(5).len(), 7);
        assert_eq!(partitions_of(10).len(), 42);
        assert_eq!(partitions_of(14).len(), 135);
        // Descending lexicographic order.
        let all = partitions_of(4);
        assert_eq!(all[0], p(&[4]));
        assert_eq!(all[4], p(&[1, 1, 1, 1]));
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        proptest! {
            #[test]
            fn ord_is_dual_of_sorted(seq in proptest::collection::vec(0usize..9, 1..12)) {
                prop_assume!(seq.iter().any(|&v| v > 0));
                let e = ord(&seq).unwrap();
                let sorted = Partition::from_parts(seq.iter().copied()).unwrap();
                prop_assert_eq!(e, sorted.dual());
            }

            #[test]
            fn new_normalizes(seq in proptest::collection::vec(0i64..9, 1..12)) {
                prop_assume!(seq.iter().any(|&v| v > 0));
                let d = Partition::new(&seq).unwrap();
                prop_assert!(d.parts().windows(2).all(|w| w[0] >= w[1]));
                prop_assert!(d.parts().iter().all(|&v| v > 0));
                prop_assert_eq!(d.total() as i64, seq.iter().sum::<i64>());
            }

            #[test]
            fn dominance_transposes_contravariantly(n in 1usize..10, i in 0usize..20, j in 0usize..20) {
                let all = partitions_of(n);
                let a = &all[i % all.len()];
                let b = &all[j % all.len()];
                prop_assert_eq!(
                    a.dominates(b).unwrap(),
                    b.dual().dominates(&a.dual()).unwrap()
                );
            }
        }
    }
}
