//! Schubert matroid representations and brute-force predicates.
//!
//! A Schubert matroid SM_n(S) is handled either as the defining set S
//! (normalized so n is the maximal element) or as the r-sequence, the
//! run-length block encoding of the indicator vector of S. Rank and
//! independence use fast alignment rules that the test suite gates against
//! the definitional oracles over all bases.

use crate::{Error, Result};

/// A subset S of [n] defining SM_n(S), kept strictly increasing with the
/// ground size equal to the maximal element.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SchubertSet {
    elements: Vec<u32>,
}

impl SchubertSet {
    pub fn new(elements: &[u32]) -> Result<Self> {
        if elements.is_empty() {
            return Err(Error::InvalidInput("S must be nonempty".into()));
        }
        let mut elems = elements.to_vec();
        elems.sort_unstable();
        elems.dedup();
        if elems.len() != elements.len() {
            return Err(Error::InvalidInput("S has repeated elements".into()));
        }
        if elems[0] == 0 {
            return Err(Error::InvalidInput("S elements must be positive".into()));
        }
        Ok(Self { elements: elems })
    }

    /// Parses a set literal like `{2,6,7,10}`.
    pub fn parse(text: &str) -> Result<Self> {
        let inner = text
            .trim()
            .strip_prefix('{')
            .and_then(|s| s.strip_suffix('}'))
            .ok_or_else(|| Error::InvalidInput(format!("bad set literal: {text}")))?;
        let elems = inner
            .split(',')
            .map(|p| {
                p.trim()
                    .parse::<u32>()
                    .map_err(|_| Error::InvalidInput(format!("bad set element: {p}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(&elems)
    }

    pub fn elements(&self) -> &[u32] {
        &self.elements
    }

    /// Ground size: the maximal element of S.
    pub fn ground_size(&self) -> u32 {
        *self.elements.last().unwrap()
    }

    /// Rank of the matroid, |S|.
    pub fn rank_total(&self) -> usize {
        self.elements.len()
    }

    pub fn contains(&self, e: u32) -> bool {
        self.elements.binary_search(&e).is_ok()
    }

    /// The 0/1 indicator vector of S over [n].
    pub fn indicator(&self) -> Vec<u8> {
        let n = self.ground_size() as usize;
        let mut ind = vec![0u8; n];
        for &e in &self.elements {
            ind[e as usize - 1] = 1;
        }
        ind
    }

    /// Run-length block encoding of the indicator vector: alternating 0-run
    /// and 1-run lengths, the leading 0-run possibly empty.
    pub fn to_rsequence(&self) -> RSequence {
        RSequence::from_indicator(&self.indicator()).unwrap()
    }
}

/// The block encoding r(S) = (r_1,...,r_{2m}) with r_1 >= 0 and r_i > 0 for
/// i >= 2; odd positions are 0-runs, even positions 1-runs.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RSequence {
    blocks: Vec<u32>,
}

impl RSequence {
    pub fn new(blocks: &[u32]) -> Result<Self> {
        if blocks.len() < 2 || !blocks.len().is_multiple_of(2) {
            return Err(Error::InvalidInput(
                "r-sequence must have even length >= 2".into(),
            ));
        }
        if blocks[1..].contains(&0) {
            return Err(Error::InvalidInput(
                "r-sequence blocks after the first must be positive".into(),
            ));
        }
        Ok(Self {
            blocks: blocks.to_vec(),
        })
    }

    /// Parses a comma-separated literal like `1,1,3,2,2,1`.
    pub fn parse(text: &str) -> Result<Self> {
        let blocks = text
            .split(',')
            .map(|p| {
                p.trim()
                    .parse::<u32>()
                    .map_err(|_| Error::InvalidInput(format!("bad r entry: {p}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(&blocks)
    }

    pub fn from_indicator(ind: &[u8]) -> Result<Self> {
        if ind.last() != Some(&1) {
            return Err(Error::InvalidInput(
                "indicator vector must end with 1".into(),
            ));
        }
        let mut blocks = Vec::new();
        let mut current = 0u8;
        let mut run = 0u32;
        for &bit in ind {
            if bit == current {
                run += 1;
            } else {
                blocks.push(run);
                current = bit;
                run = 1;
            }
        }
        blocks.push(run);
        Self::new(&blocks)
    }

    pub fn blocks(&self) -> &[u32] {
        &self.blocks
    }

    /// Number of (0-run, 1-run) block pairs.
    pub fn pairs(&self) -> usize {
        self.blocks.len() / 2
    }

    /// Ground size n = sum of all blocks.
    pub fn ground_size(&self) -> u32 {
        self.blocks.iter().sum()
    }

    /// Rank |S| = sum of the 1-run blocks.
    pub fn rank_total(&self) -> u32 {
        self.blocks.iter().skip(1).step_by(2).sum()
    }

    pub fn to_set(&self) -> SchubertSet {
        let mut elements = Vec::new();
        let mut pos = 0u32;
        for (i, &b) in self.blocks.iter().enumerate() {
            if i % 2 == 1 {
                elements.extend(pos + 1..=pos + b);
            }
            pos += b;
        }
        SchubertSet::new(&elements).unwrap()
    }

    /// The per-pair path bounds: u_i = min(r_{2i-1}, sum_{j>i} r_{2j}) and
    /// v_i = min(r_{2i}, sum_{j<i} r_{2j-1}), empty sums reading as 0.
    pub fn uv_bounds(&self) -> UVBounds {
        let m = self.pairs();
        let mut u = Vec::with_capacity(m);
        let mut v = Vec::with_capacity(m);
        for i in 0..m {
            let ones_after: u32 =
                (i + 1..m).map(|j| self.blocks[2 * j + 1]).sum();
            let zeros_before: u32 = (0..i).map(|j| self.blocks[2 * j]).sum();
            u.push(self.blocks[2 * i].min(ones_after));
            v.push(self.blocks[2 * i + 1].min(zeros_before));
        }
        UVBounds { u, v }
    }

    /// The r-sequence of the dual matroid: the reversed block tuple
    /// (equivalently, the reversed complement of the indicator). When a
    /// leading zero block reverses into a trailing empty element block,
    /// the resulting loops are dropped so the maximal element is again
    /// the ground size; this leaves every lattice-point count unchanged.
    /// The free matroid's rank-0 dual has no Schubert set at all; its
    /// polytope is a single point, so the free matroid stands in for it.
    pub fn dual(&self) -> RSequence {
        let mut ind: Vec<u8> = self.to_set().indicator();
        for x in &mut ind {
            *x = 1 - *x;
        }
        ind.reverse();
        while ind.last() == Some(&0) {
            ind.pop();
        }
        if ind.is_empty() {
            return self.clone();
        }
        Self::from_indicator(&ind).unwrap()
    }
}

/// Caps on the path offsets of the counting formula: -t*v_i <= c_i <= t*u_i.
/// Always u_m = 0 and v_1 = 0.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct UVBounds {
    pub u: Vec<u32>,
    pub v: Vec<u32>,
}

fn check_subset(n: u32, subset: &[u32]) -> Result<()> {
    if subset.iter().any(|&e| e == 0 || e > n) {
        return Err(Error::InvalidInput(format!(
            "subset element outside ground set [{n}]"
        )));
    }
    Ok(())
}

fn sorted(subset: &[u32]) -> Vec<u32> {
    let mut v = subset.to_vec();
    v.sort_unstable();
    v.dedup();
    v
}

/// T is a basis iff |T| = |S| and the i-th smallest element of T does not
/// exceed the i-th smallest element of S.
pub fn is_basis(s: &SchubertSet, subset: &[u32]) -> Result<bool> {
    check_subset(s.ground_size(), subset)?;
    let t = sorted(subset);
    Ok(t.len() == s.rank_total()
        && t.iter().zip(s.elements()).all(|(a, b)| a <= b))
}

/// Independence by the alignment rule: sort I increasingly and compare
/// elementwise against the |I| largest elements of S. Gated against the
/// exists-basis-superset oracle by the test suite.
pub fn is_independent(s: &SchubertSet, subset: &[u32]) -> Result<bool> {
    check_subset(s.ground_size(), subset)?;
    let t = sorted(subset);
    if t.len() > s.rank_total() {
        return Ok(false);
    }
    let tail = &s.elements()[s.rank_total() - t.len()..];
    Ok(t.iter().zip(tail).all(|(a, b)| a <= b))
}

/// Rank by greedy matching: scan T in decreasing order, matching each
/// element against the largest unmatched element of S that dominates it.
/// Gated against the definitional max over bases by the test suite.
pub fn rank(s: &SchubertSet, subset: &[u32]) -> Result<usize> {
    check_subset(s.ground_size(), subset)?;
    let t = sorted(subset);
    let mut s_iter = s.elements().iter().rev().peekable();
    let mut matched = 0;
    for &e in t.iter().rev() {
        if let Some(&&cap) = s_iter.peek() {
            if cap >= e {
                s_iter.next();
                matched += 1;
            }
        }
    }
    Ok(matched)
}

/// Classification flags for a subset of the ground set.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub struct SubsetClass {
    pub basis: bool,
    pub independent: bool,
    pub circuit: bool,
    pub flat: bool,
    pub hyperplane: bool,
}

impl SubsetClass {
    pub fn circuit_hyperplane(&self) -> bool {
        self.circuit && self.hyperplane
    }
}

/// Computes all classification flags from the rank and independence rules:
/// a circuit is dependent with every proper subset independent; a flat gains
/// rank under any extension; a hyperplane is a flat of rank rk(M) - 1.
pub fn classify_subset(s: &SchubertSet, subset: &[u32]) -> Result<SubsetClass> {
    check_subset(s.ground_size(), subset)?;
    let t = sorted(subset);
    let n = s.ground_size();
    let independent = is_independent(s, &t)?;
    let circuit = !independent && {
        (0..t.len()).all(|i| {
            let mut proper = t.clone();
            proper.remove(i);
            is_independent(s, &proper).unwrap()
        })
    };
    let rk = rank(s, &t)?;
    let flat = (1..=n)
        .filter(|e| !t.contains(e))
        .all(|e| {
            let mut ext = t.clone();
            ext.push(e);
            rank(s, &ext).unwrap() > rk
        });
    Ok(SubsetClass {
        basis: is_basis(s, &t)?,
        independent,
        circuit,
        flat,
        hyperplane: flat && rk + 1 == s.rank_total(),
    })
}

fn subsets_of_size(n: u32, k: usize) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn rec(start: u32, n: u32, k: usize, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for e in start..=n {
            cur.push(e);
            rec(e + 1, n, k, cur, out);
            cur.pop();
        }
    }
    rec(1, n, k, &mut cur, &mut out);
    out
}

/// Brute force over all rank-size subsets: sparse paving means each is a
/// basis or a circuit-hyperplane.
pub fn is_sparse_paving(s: &SchubertSet) -> Result<bool> {
    for t in subsets_of_size(s.ground_size(), s.rank_total()) {
        let class = classify_subset(s, &t)?;
        if !class.basis && !class.circuit_hyperplane() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// All bases of SM_n(S), by filtering the |S|-subsets of [n].
pub fn enumerate_bases(s: &SchubertSet) -> Vec<Vec<u32>> {
    subsets_of_size(s.ground_size(), s.rank_total())
        .into_iter()
        .filter(|t| is_basis(s, t).unwrap())
        .collect()
}

/// All circuit-hyperplanes of rank size, for the classifier report.
pub fn circuit_hyperplanes(s: &SchubertSet) -> Result<Vec<Vec<u32>>> {
    let mut out = Vec::new();
    for t in subsets_of_size(s.ground_size(), s.rank_total()) {
        if classify_subset(s, &t)?.circuit_hyperplane() {
            out.push(t);
        }
    }
    Ok(out)
}

/// All subsets of [n], for exhaustive gating tests.
pub fn all_subsets(n: u32) -> Vec<Vec<u32>> {
    (0..1u32 << n)
        .map(|mask| (1..=n).filter(|e| mask >> (e - 1) & 1 == 1).collect())
        .collect()
}

/// All nonempty S subseteq [n] with max element n, i.e. all Schubert
/// matroids with ground size exactly n.
pub fn all_schubert_sets(n: u32) -> Vec<SchubertSet> {
    (0..1u32 << (n - 1))
        .map(|mask| {
            let mut elems: Vec<u32> =
                (1..n).filter(|e| mask >> (e - 1) & 1 == 1).collect();
            elems.push(n);
            SchubertSet::new(&elems).unwrap()
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(elems: &[u32]) -> SchubertSet {
        SchubertSet::new(elems).unwrap()
    }

    #[test]
    fn rsequence_examples() {
        assert_eq!(set(&[2, 6, 7, 10]).to_rsequence().blocks(), &[1, 1, 3, 2, 2, 1]);
        assert_eq!(set(&[3, 6, 8]).to_rsequence().blocks(), &[2, 1, 2, 1, 1, 1]);
        assert_eq!(set(&[1]).to_rsequence().blocks(), &[0, 1]);
    }

    #[test]
    fn rsequence_roundtrip() {
        for n in 2..=7 {
            for s in all_schubert_sets(n) {
                let r = s.to_rsequence();
                assert_eq!(r.to_set(), s);
                assert_eq!(RSequence::new(r.blocks()).unwrap().blocks(), r.blocks());
                assert_eq!(r.ground_size(), s.ground_size());
                assert_eq!(r.rank_total() as usize, s.rank_total());
            }
        }
    }

    #[test]
    fn uv_bounds_examples() {
        let uv = RSequence::new(&[2, 1, 2, 1, 1, 1]).unwrap().uv_bounds();
        assert_eq!(uv.u, &[2, 1, 0]);
        assert_eq!(uv.v, &[0, 1, 1]);
        let uv = RSequence::new(&[3, 2]).unwrap().uv_bounds();
        assert_eq!((uv.u, uv.v), (vec![0], vec![0]));
        let uv = RSequence::new(&[1, 1, 1, 1]).unwrap().uv_bounds();
        assert_eq!((uv.u, uv.v), (vec![1, 0], vec![0, 1]));
    }

    #[test]
    fn uv_ends_are_zero() {
        for n in 2..=7 {
            for s in all_schubert_sets(n) {
                let uv = s.to_rsequence().uv_bounds();
                assert_eq!(*uv.u.last().unwrap(), 0);
                assert_eq!(uv.v[0], 0);
            }
        }
    }

    #[test]
    fn parse_literals() {
        assert_eq!(SchubertSet::parse("{2,6,7,10}").unwrap(), set(&[2, 6, 7, 10]));
        assert_eq!(
            RSequence::parse("1,1,3,2,2,1").unwrap().blocks(),
            &[1, 1, 3, 2, 2, 1]
        );
        assert!(SchubertSet::parse("2,4").is_err());
        assert!(RSequence::parse("1,0,1").is_err());
        assert!(RSequence::parse("1,1,0,1").is_err());
    }

    #[test]
    fn basis_examples() {
        let s = set(&[2, 4]);
        assert!(is_basis(&s, &[1, 3]).unwrap());
        assert!(!is_basis(&s, &[3, 4]).unwrap());
        assert!(is_basis(&s, &[2, 4]).unwrap());
        assert!(is_basis(&s, &[5]).is_err());
    }

    #[test]
    fn independence_examples() {
        let s = set(&[2, 4]);
        assert!(is_independent(&s, &[3]).unwrap());
        assert!(!is_independent(&s, &[3, 4]).unwrap());
        assert!(is_independent(&s, &[]).unwrap());
    }

    #[test]
    fn rank_examples() {
        let s = set(&[2, 4]);
        assert_eq!(rank(&s, &[3, 4]).unwrap(), 1);
        assert_eq!(rank(&s, &[1, 2, 3, 4]).unwrap(), 2);
        assert_eq!(rank(&s, &[]).unwrap(), 0);
    }

    #[test]
    fn classify_examples() {
        let s = set(&[2, 4]);
        let ch = classify_subset(&s, &[3, 4]).unwrap();
        assert!(ch.circuit_hyperplane() && !ch.basis);
        assert!(classify_subset(&s, &[1, 3]).unwrap().basis);
        assert!(classify_subset(&s, &[1, 2]).unwrap().basis);
    }

    /// Definitional oracles: rank as max basis intersection, independence
    /// as basis containment.
    fn rank_oracle(t: &[u32], bases: &[Vec<u32>]) -> usize {
        bases
            .iter()
            .map(|b| t.iter().filter(|e| b.contains(e)).count())
            .max()
            .unwrap()
    }

    #[test]
    fn rank_and_independence_match_bruteforce() {
        for n in 2..=7 {
            for s in all_schubert_sets(n) {
                let bases = enumerate_bases(&s);
                for t in all_subsets(n) {
                    let brute = rank_oracle(&t, &bases);
                    assert_eq!(rank(&s, &t).unwrap(), brute, "S={s:?} T={t:?}");
                    let indep_brute = bases
                        .iter()
                        .any(|b| t.iter().all(|e| b.contains(e)));
                    assert_eq!(
                        is_independent(&s, &t).unwrap(),
                        indep_brute,
                        "S={s:?} T={t:?}"
                    );
                }
            }
        }
    }

    #[test]
    fn rank_is_monotone_and_submodular() {
        for n in 2..=5 {
            for s in all_schubert_sets(n) {
                let subsets = all_subsets(n);
                for a in &subsets {
                    for b in &subsets {
                        let union: Vec<u32> = (1..=n)
                            .filter(|e| a.contains(e) || b.contains(e))
                            .collect();
                        let inter: Vec<u32> = (1..=n)
                            .filter(|e| a.contains(e) && b.contains(e))
                            .collect();
                        let (ra, rb) = (rank(&s, a).unwrap(), rank(&s, b).unwrap());
                        let (ru, ri) =
                            (rank(&s, &union).unwrap(), rank(&s, &inter).unwrap());
                        assert!(ru + ri <= ra + rb);
                        assert!(ra <= ru && rb <= ru);
                    }
                }
            }
        }
    }

    #[test]
    fn sparse_paving_matches_characterization() {
        // S = {k, k+2, ..., n} for 1 <= k <= n-2, i.e.
        // r(S) = (k-1, 1, 1, n-k-1) with a zero first block at k = 1,
        // plus the degenerate uniform cases S = {n-k+1, ..., n} where
        // every rank-size subset is a basis and sparse paving holds
        // vacuously.
        for n in 2..=7u32 {
            for s in all_schubert_sets(n) {
                let uniform = s.elements()
                    == (n + 1 - s.rank_total() as u32..=n).collect::<Vec<_>>();
                let expected = uniform
                    || (1..=n.saturating_sub(2)).any(|k| {
                        let pattern: Vec<u32> =
                            std::iter::once(k).chain(k + 2..=n).collect();
                        s.elements() == pattern
                    });
                assert_eq!(
                    is_sparse_paving(&s).unwrap(),
                    expected,
                    "S={:?}",
                    s.elements()
                );
            }
        }
    }

    #[test]
    fn sparse_paving_examples() {
        assert!(is_sparse_paving(&set(&[2, 4, 5])).unwrap());
        assert!(!is_sparse_paving(&set(&[2, 6, 7, 10])).unwrap());
        // S = {3} is the uniform matroid U_{1,3}: every 1-subset is a
        // basis, so it is (vacuously) sparse paving.
        assert!(is_sparse_paving(&set(&[3])).unwrap());
    }

    #[test]
    fn dual_normalization() {
        // Palindromic block tuples are self-dual.
        assert_eq!(RSequence::new(&[1, 1, 1, 1]).unwrap().dual().blocks(), &[1, 1, 1, 1]);
        // S = {3} is U_{1,3}; the dual U_{2,3} has S' = {2,3}.
        assert_eq!(RSequence::new(&[2, 1]).unwrap().dual().blocks(), &[1, 2]);
        // Plain tuple reversal whenever the leading block is nonzero.
        let r = RSequence::new(&[1, 1, 3, 2, 2, 1]).unwrap();
        assert_eq!(r.dual().blocks(), &[1, 2, 2, 3, 1, 1]);
        assert_eq!(r.dual().dual(), r);
        // Leading zero block: S = {1,2,3} is free; its dual drops to loops
        // only, represented by the free matroid itself (same polytope).
        let free = RSequence::new(&[0, 3]).unwrap();
        assert_eq!(free.dual(), free);
        // S = {1, 3}: r = (0,1,1,1) reverses to (1,1,1,0); the trailing
        // empty block and its zero run are dropped, giving (1,1) on n = 2.
        assert_eq!(RSequence::new(&[0, 1, 1, 1]).unwrap().dual().blocks(), &[1, 1]);
    }
}
