//! Complete mappings: the data model, verification, exact-cover search,
//! and the direct constructions for odd-order and even-cyclic groups.

use thiserror::Error;

use crate::dlx::{Dlx, SolveOutcome};
use crate::group::Group;

/// Default node budget for [`CompleteMapping::search`].
pub const DEFAULT_SEARCH_BUDGET: u64 = 100_000_000;

#[derive(Debug, Error)]
pub enum MappingError {
    #[error("table length {found} does not match group order {expected}")]
    SizeMismatch { expected: usize, found: usize },
    #[error("phi is not a bijection: value {value} repeats")]
    PhiNotBijective { value: usize },
    #[error("psi is not a bijection: value {value} repeats")]
    PsiNotBijective { value: usize },
    #[error("product identity fails at g = {g}: g*phi(g) != psi(g)")]
    ProductMismatch { g: usize },
    #[error("{which} is not a bijection onto the group")]
    TripleNotBijective { which: &'static str },
    #[error("triple violates a(i)b(i) = c(i) at index {index}")]
    TripleInvalid { index: usize },
    #[error("group order {order} is even")]
    EvenOrder { order: usize },
    #[error("order {order} is odd")]
    OddOrder { order: usize },
    #[error("csv error: {0}")]
    Csv(String),
}

/// Checks the complete-mapping conditions for raw tables against a group:
/// sizes, bijectivity of both tables, and `g * phi(g) = psi(g)` for all `g`.
/// The first violated constraint is reported.
pub fn verify_tables(group: &Group, phi: &[usize], psi: &[usize]) -> Result<(), MappingError> {
    let n = group.order();
    if phi.len() != n {
        return Err(MappingError::SizeMismatch {
            expected: n,
            found: phi.len(),
        });
    }
    if psi.len() != n {
        return Err(MappingError::SizeMismatch {
            expected: n,
            found: psi.len(),
        });
    }
    let mut seen = vec![false; n];
    for &v in phi {
        if v >= n || seen[v] {
            return Err(MappingError::PhiNotBijective { value: v.min(n - 1) });
        }
        seen[v] = true;
    }
    seen.iter_mut().for_each(|b| *b = false);
    for &v in psi {
        if v >= n || seen[v] {
            return Err(MappingError::PsiNotBijective { value: v.min(n - 1) });
        }
        seen[v] = true;
    }
    for g in 0..n {
        if group.mul(g, phi[g]) != psi[g] {
            return Err(MappingError::ProductMismatch { g });
        }
    }
    Ok(())
}

/// A verified complete mapping `(phi, psi)` of a group: both tables are
/// bijections and `g * phi(g) = psi(g)` holds everywhere. Instances can
/// only be built through validating constructors.
#[derive(Clone)]
pub struct CompleteMapping {
    group: Group,
    phi: Vec<u32>,
    psi: Vec<u32>,
}

impl std::fmt::Debug for CompleteMapping {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "CompleteMapping(order {})", self.group.order())
    }
}

/// Result of the exact-cover search.
#[derive(Debug)]
pub enum SearchOutcome {
    Found(CompleteMapping),
    /// Proven: the whole search tree was exhausted.
    NotFound,
    /// The node budget ran out; existence is undecided.
    BudgetExhausted,
}

impl SearchOutcome {
    pub fn found(self) -> Option<CompleteMapping> {
        match self {
            SearchOutcome::Found(cm) => Some(cm),
            _ => None,
        }
    }
}

impl CompleteMapping {
    pub fn new(group: &Group, phi: Vec<usize>, psi: Vec<usize>) -> Result<Self, MappingError> {
        verify_tables(group, &phi, &psi)?;
        Ok(CompleteMapping {
            group: group.clone(),
            phi: phi.into_iter().map(|v| v as u32).collect(),
            psi: psi.into_iter().map(|v| v as u32).collect(),
        })
    }

    pub fn group(&self) -> &Group {
        &self.group
    }

    pub fn phi(&self) -> Vec<usize> {
        self.phi.iter().map(|&v| v as usize).collect()
    }

    pub fn psi(&self) -> Vec<usize> {
        self.psi.iter().map(|&v| v as usize).collect()
    }

    pub fn phi_of(&self, g: usize) -> usize {
        self.phi[g] as usize
    }

    pub fn psi_of(&self, g: usize) -> usize {
        self.psi[g] as usize
    }

    /// Re-runs the full validation; true for every constructed instance.
    pub fn verify(&self) -> bool {
        verify_tables(&self.group, &self.phi(), &self.psi()).is_ok()
    }

    /// Builds a mapping from bijections `a, b, c : I -> G` with
    /// `a(i)·b(i) = c(i)`, via `phi = b∘a⁻¹`, `psi = c∘a⁻¹`. The result is
    /// independent of any relabeling of the index set.
    pub fn from_triple(
        group: &Group,
        a: &[usize],
        b: &[usize],
        c: &[usize],
    ) -> Result<Self, MappingError> {
        let n = group.order();
        for (name, t) in [("a", a), ("b", b), ("c", c)] {
            if t.len() != n {
                return Err(MappingError::SizeMismatch {
                    expected: n,
                    found: t.len(),
                });
            }
            let mut seen = vec![false; n];
            for &v in t {
                if v >= n || seen[v] {
                    return Err(MappingError::TripleNotBijective { which: name });
                }
                seen[v] = true;
            }
        }
        for i in 0..n {
            if group.mul(a[i], b[i]) != c[i] {
                return Err(MappingError::TripleInvalid { index: i });
            }
        }
        let mut phi = vec![0usize; n];
        let mut psi = vec![0usize; n];
        for i in 0..n {
            phi[a[i]] = b[i];
            psi[a[i]] = c[i];
        }
        CompleteMapping::new(group, phi, psi)
    }

    /// The direct construction for odd order: `phi` is the identity and
    /// `psi(g) = g²` (squaring is a bijection when the order is odd).
    pub fn for_odd_group(group: &Group) -> Result<Self, MappingError> {
        let n = group.order();
        if n % 2 == 0 {
            return Err(MappingError::EvenOrder { order: n });
        }
        let phi: Vec<usize> = (0..n).collect();
        let psi: Vec<usize> = (0..n).map(|g| group.mul(g, g)).collect();
        CompleteMapping::new(group, phi, psi)
    }

    /// Exact-cover transversal search over the Cayley table.
    ///
    /// Rows are the pairs `(g, h)` covering columns `row-g`, `col-h` and
    /// `sym-(g·h)`; an exact cover of all `3n` columns is precisely a
    /// complete mapping with `phi(g) = h`. Columns are chosen by minimum
    /// remaining candidates (ties by lowest index); rows are inserted in
    /// a fixed seeded shuffle, which decorrelates the trial order from
    /// the group structure without giving up determinism. `NotFound` is
    /// returned only after the tree is exhausted; running out of `budget`
    /// nodes yields the distinct outcome `BudgetExhausted`.
    pub fn search(group: &Group, budget: u64) -> SearchOutcome {
        let n = group.order();
        let mut pairs: Vec<(usize, usize)> = (0..n * n).map(|i| (i / n, i % n)).collect();
        let mut rng = crate::rng::SplitMix64::new(0x6a09_e667_f3bc_c908 ^ n as u64);
        for i in (1..pairs.len()).rev() {
            pairs.swap(i, rng.below(i + 1));
        }
        let mut d = Dlx::new(3 * n);
        for &(g, h) in &pairs {
            d.add_row(&[g, n + h, 2 * n + group.mul(g, h)]);
        }
        match d.solve_first(budget) {
            SolveOutcome::Solution(rows) => {
                let mut phi = vec![0usize; n];
                let mut psi = vec![0usize; n];
                for row in rows {
                    let (g, h) = pairs[row];
                    phi[g] = h;
                    psi[g] = group.mul(g, h);
                }
                let cm = CompleteMapping::new(group, phi, psi)
                    .expect("exact cover yields a complete mapping");
                SearchOutcome::Found(cm)
            }
            SolveOutcome::Exhausted => SearchOutcome::NotFound,
            SolveOutcome::Budget => SearchOutcome::BudgetExhausted,
        }
    }

    /// CSV serialization: header `g,phi,psi`, one row per element id.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("g,phi,psi\n");
        for g in 0..self.group.order() {
            out.push_str(&format!("{g},{},{}\n", self.phi[g], self.psi[g]));
        }
        out
    }
}

/// Parses the CSV format of [`CompleteMapping::to_csv`] into raw tables.
pub fn read_csv_tables(text: &str) -> Result<(Vec<usize>, Vec<usize>), MappingError> {
    let mut lines = text.lines().filter(|l| !l.trim().is_empty());
    match lines.next() {
        Some(h) if h.trim() == "g,phi,psi" => {}
        other => {
            return Err(MappingError::Csv(format!(
                "expected header 'g,phi,psi', found {other:?}"
            )))
        }
    }
    let mut rows: Vec<(usize, usize, usize)> = Vec::new();
    for line in lines {
        let mut parts = line.trim().split(',');
        let mut next = || -> Result<usize, MappingError> {
            parts
                .next()
                .ok_or_else(|| MappingError::Csv(format!("short row {line:?}")))?
                .trim()
                .parse()
                .map_err(|_| MappingError::Csv(format!("bad integer in {line:?}")))
        };
        let g = next()?;
        let phi = next()?;
        let psi = next()?;
        rows.push((g, phi, psi));
    }
    let n = rows.len();
    let mut phi = vec![usize::MAX; n];
    let mut psi = vec![usize::MAX; n];
    for (g, p, s) in rows {
        if g >= n || phi[g] != usize::MAX {
            return Err(MappingError::Csv(format!("row ids must cover 0..{n} once (g={g})")));
        }
        phi[g] = p;
        psi[g] = s;
    }
    Ok((phi, psi))
}

/// Near-mapping of the cyclic group of even order `2k`, written
/// additively: permutations `alpha`, `beta` of `Z_{2k}` with
/// `c + alpha(c) = beta(c)` for every `c ≠ 0`, `beta(0) = 0`, and
/// `alpha(0) = k ≠ 0`. Even cyclic groups have no complete mapping, and
/// this is the standard one-equation-short substitute.
#[derive(Clone, Debug)]
pub struct NearMappingCyclic {
    order: usize,
    alpha: Vec<u32>,
    beta: Vec<u32>,
}

impl NearMappingCyclic {
    pub fn order(&self) -> usize {
        self.order
    }

    pub fn alpha(&self) -> Vec<usize> {
        self.alpha.iter().map(|&v| v as usize).collect()
    }

    pub fn beta(&self) -> Vec<usize> {
        self.beta.iter().map(|&v| v as usize).collect()
    }
}

/// Builds the near-mapping of `Z_{2k}`: `alpha(0) = k`, `alpha(i) = i` for
/// `1 ≤ i < k`, `alpha(i) = i + 1 mod 2k` for `k ≤ i < 2k`; `beta(i) = 2i`
/// for `0 ≤ i < k` and `beta(i) = 2i + 1 mod 2k` for `k ≤ i < 2k`.
pub fn near_mapping_cyclic(order: usize) -> Result<NearMappingCyclic, MappingError> {
    if order == 0 || order % 2 == 1 {
        return Err(MappingError::OddOrder { order });
    }
    let k = order / 2;
    let mut alpha = vec![0u32; order];
    let mut beta = vec![0u32; order];
    alpha[0] = k as u32;
    for i in 1..k {
        alpha[i] = i as u32;
    }
    for i in k..order {
        alpha[i] = ((i + 1) % order) as u32;
    }
    for i in 0..k {
        beta[i] = (2 * i % order) as u32;
    }
    for i in k..order {
        beta[i] = ((2 * i + 1) % order) as u32;
    }
    // invariants: both are permutations, beta(0) = 0, c + alpha(c) = beta(c)
    // away from 0
    let mut seen = vec![false; order];
    for &v in &alpha {
        assert!(!seen[v as usize]);
        seen[v as usize] = true;
    }
    seen.iter_mut().for_each(|b| *b = false);
    for &v in &beta {
        assert!(!seen[v as usize]);
        seen[v as usize] = true;
    }
    assert_eq!(beta[0], 0);
    assert_ne!(alpha[0], 0);
    for c in 1..order {
        assert_eq!((c + alpha[c] as usize) % order, beta[c] as usize);
    }
    Ok(NearMappingCyclic { order, alpha, beta })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family;

    #[test]
    fn verify_examples() {
        let z3 = family::cyclic(3).unwrap();
        assert!(verify_tables(&z3, &[0, 1, 2], &[0, 2, 1]).is_ok());
        let z2 = family::cyclic(2).unwrap();
        // phi = identity, psi = squaring ≡ 0: psi is not bijective
        assert!(matches!(
            verify_tables(&z2, &[0, 1], &[0, 0]),
            Err(MappingError::PsiNotBijective { .. })
        ));
    }

    #[test]
    fn triple_construction() {
        let z3 = family::cyclic(3).unwrap();
        let cm = CompleteMapping::from_triple(&z3, &[0, 1, 2], &[0, 1, 2], &[0, 2, 1]).unwrap();
        assert_eq!(cm.phi(), vec![0, 1, 2]);
        // relabeling the index set leaves (phi, psi) unchanged
        let cm2 = CompleteMapping::from_triple(&z3, &[2, 0, 1], &[2, 0, 1], &[1, 0, 2]).unwrap();
        assert_eq!(cm.phi(), cm2.phi());
        assert_eq!(cm.psi(), cm2.psi());
        assert!(matches!(
            CompleteMapping::from_triple(&z3, &[0, 1, 2], &[1, 0, 2], &[0, 1, 2]),
            Err(MappingError::TripleInvalid { index: 0 })
        ));
    }

    #[test]
    fn odd_construction() {
        let z5 = family::cyclic(5).unwrap();
        let cm = CompleteMapping::for_odd_group(&z5).unwrap();
        assert_eq!(cm.psi(), vec![0, 2, 4, 1, 3]);
        let one = family::cyclic(1).unwrap();
        let cm = CompleteMapping::for_odd_group(&one).unwrap();
        assert_eq!(cm.phi(), vec![0]);
        assert!(matches!(
            CompleteMapping::for_odd_group(&family::cyclic(6).unwrap()),
            Err(MappingError::EvenOrder { order: 6 })
        ));
    }

    /// Independent oracle: brute-force enumeration over all phi tables.
    fn brute_force_exists(g: &Group) -> bool {
        let n = g.order();
        let mut phi = vec![usize::MAX; n];
        let mut used_h = vec![false; n];
        let mut used_p = vec![false; n];
        fn rec(
            g: &Group,
            depth: usize,
            phi: &mut [usize],
            used_h: &mut [bool],
            used_p: &mut [bool],
        ) -> bool {
            let n = g.order();
            if depth == n {
                return true;
            }
            for h in 0..n {
                if used_h[h] || used_p[g.mul(depth, h)] {
                    continue;
                }
                used_h[h] = true;
                used_p[g.mul(depth, h)] = true;
                phi[depth] = h;
                if rec(g, depth + 1, phi, used_h, used_p) {
                    return true;
                }
                used_h[h] = false;
                used_p[g.mul(depth, h)] = false;
            }
            false
        }
        rec(g, 0, &mut phi, &mut used_h, &mut used_p)
    }

    #[test]
    fn search_small_cases_match_brute_force() {
        for (spec, expect) in [
            (Family::Cyclic(2), false),
            (Family::Cyclic(4), false),
            (Family::ElementaryAbelian { p: 2, k: 2 }, true),
            (Family::Cyclic(5), true),
            (Family::Quaternion8, true),
        ] {
            let g = family::builtin(&spec).unwrap();
            assert_eq!(brute_force_exists(&g), expect, "{spec:?}");
            match CompleteMapping::search(&g, 1_000_000) {
                SearchOutcome::Found(cm) => {
                    assert!(expect, "{spec:?}");
                    assert!(cm.verify());
                }
                SearchOutcome::NotFound => assert!(!expect, "{spec:?}"),
                SearchOutcome::BudgetExhausted => panic!("budget too small for {spec:?}"),
            }
        }
    }

    use crate::family::Family;

    #[test]
    fn search_is_deterministic() {
        let g = family::elementary_abelian(2, 2).unwrap();
        let a = CompleteMapping::search(&g, 1_000).found().unwrap();
        let b = CompleteMapping::search(&g, 1_000).found().unwrap();
        assert_eq!(a.phi(), b.phi());
        assert_eq!(a.psi(), b.psi());
    }

    #[test]
    fn near_mapping_values() {
        let nm = near_mapping_cyclic(2).unwrap();
        assert_eq!(nm.alpha(), vec![1, 0]);
        assert_eq!(nm.beta(), vec![0, 1]);
        let nm = near_mapping_cyclic(6).unwrap();
        assert_eq!(nm.alpha(), vec![3, 1, 2, 4, 5, 0]);
        assert_eq!(nm.beta(), vec![0, 2, 4, 1, 3, 5]);
        assert!(matches!(
            near_mapping_cyclic(7),
            Err(MappingError::OddOrder { order: 7 })
        ));
    }

    #[test]
    fn csv_roundtrip() {
        let g = family::elementary_abelian(2, 2).unwrap();
        let cm = CompleteMapping::search(&g, 1_000).found().unwrap();
        let csv = cm.to_csv();
        let (phi, psi) = read_csv_tables(&csv).unwrap();
        assert_eq!(phi, cm.phi());
        assert_eq!(psi, cm.psi());
    }
}
