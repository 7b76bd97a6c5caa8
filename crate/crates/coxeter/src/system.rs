//! Coxeter systems and exact element arithmetic.
//!
//! Crystallographic types act on simple-root coordinates by integer
//! matrices; an element stores its matrix together with the inverse
//! matrix so one-sided descents are cheap. The dihedral family `I2(m)`
//! is realized directly by rotation/reflection arithmetic on residues
//! mod `m`: no root system is needed there.

use crate::cartan::{self, Cartan};
use crate::word::Word;
use crate::CoxeterError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CoxeterType {
    A(usize),
    B(usize),
    D(usize),
    E6,
    E7,
    E8,
    F4,
    I2(usize),
}

impl CoxeterType {
    pub fn rank(&self) -> usize {
        match self {
            CoxeterType::A(l) | CoxeterType::B(l) | CoxeterType::D(l) => *l,
            CoxeterType::E6 => 6,
            CoxeterType::E7 => 7,
            CoxeterType::E8 => 8,
            CoxeterType::F4 => 4,
            CoxeterType::I2(_) => 2,
        }
    }

    /// Group order, for choosing verification strategies.
    pub fn order(&self) -> u128 {
        fn fact(n: usize) -> u128 {
            (1..=n as u128).product()
        }
        match self {
            CoxeterType::A(l) => fact(l + 1),
            CoxeterType::B(l) => (1u128 << l) * fact(*l),
            CoxeterType::D(l) => (1u128 << (l - 1)) * fact(*l),
            CoxeterType::E6 => 51_840,
            CoxeterType::E7 => 2_903_040,
            CoxeterType::E8 => 696_729_600,
            CoxeterType::F4 => 1_152,
            CoxeterType::I2(m) => 2 * *m as u128,
        }
    }

    /// Parses a type name plus rank argument, e.g. `("F4", 4)`,
    /// `("B", 3)`, `("I2", 6)` (the number is `m` for `I2`).
    pub fn parse(name: &str, rank: usize) -> Result<CoxeterType, CoxeterError> {
        let unsupported = || CoxeterError::Unsupported(format!("{name} rank {rank}"));
        match name.to_ascii_uppercase().as_str() {
            "A" => (rank >= 1 && rank <= 9).then_some(CoxeterType::A(rank)).ok_or_else(unsupported),
            "B" | "C" => (rank >= 2 && rank <= 9).then_some(CoxeterType::B(rank)).ok_or_else(unsupported),
            "D" => (rank >= 4 && rank <= 9).then_some(CoxeterType::D(rank)).ok_or_else(unsupported),
            "E6" => (rank == 6).then_some(CoxeterType::E6).ok_or_else(unsupported),
            "E7" => (rank == 7).then_some(CoxeterType::E7).ok_or_else(unsupported),
            "E8" => (rank == 8).then_some(CoxeterType::E8).ok_or_else(unsupported),
            "F4" => (rank == 4).then_some(CoxeterType::F4).ok_or_else(unsupported),
            "I2" => (rank >= 3 && rank <= 1000).then_some(CoxeterType::I2(rank)).ok_or_else(unsupported),
            _ => Err(unsupported()),
        }
    }
}

impl std::fmt::Display for CoxeterType {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CoxeterType::A(l) => write!(f, "A{l}"),
            CoxeterType::B(l) => write!(f, "B{l}"),
            CoxeterType::D(l) => write!(f, "D{l}"),
            CoxeterType::E6 => write!(f, "E6"),
            CoxeterType::E7 => write!(f, "E7"),
            CoxeterType::E8 => write!(f, "E8"),
            CoxeterType::F4 => write!(f, "F4"),
            CoxeterType::I2(m) => write!(f, "I2({m})"),
        }
    }
}

/// Group element in its canonical exact representation.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum Element {
    /// Matrix on simple-root coordinates (row-major), plus its inverse.
    Mat { m: Vec<i64>, minv: Vec<i64> },
    /// Dihedral element: `rot k` is `x ↦ x + k`, `refl k` is `x ↦ k - x`.
    Dih { refl: bool, k: usize },
}

pub(crate) enum Backend {
    Roots(RootData),
    Dihedral(DihedralData),
}

pub(crate) struct RootData {
    pub rank: usize,
    pub cartan: Cartan,
    pub pos_roots: Vec<Vec<i64>>,
    pub gen_mats: Vec<Vec<i64>>,
}

pub(crate) struct DihedralData {
    pub m: usize,
    /// length of each element, indexed by `refl as usize * m + k`
    pub lengths: Vec<u32>,
}

pub struct CoxeterSystem {
    ctype: CoxeterType,
    backend: Backend,
    coxeter_matrix: Vec<Vec<u32>>,
}

fn mat_mul(rank: usize, a: &[i64], b: &[i64]) -> Vec<i64> {
    let mut out = vec![0i64; rank * rank];
    for i in 0..rank {
        for k in 0..rank {
            let v = a[i * rank + k];
            if v == 0 {
                continue;
            }
            for j in 0..rank {
                out[i * rank + j] += v * b[k * rank + j];
            }
        }
    }
    out
}

impl CoxeterSystem {
    pub fn new(ctype: CoxeterType) -> Result<CoxeterSystem, CoxeterError> {
        let backend = match ctype {
            CoxeterType::I2(m) => Backend::Dihedral(DihedralData::new(m)),
            CoxeterType::A(l) => Backend::Roots(RootData::new(cartan::type_a(l), 'A', l)),
            CoxeterType::B(l) => Backend::Roots(RootData::new(cartan::type_b(l), 'B', l)),
            CoxeterType::D(l) => Backend::Roots(RootData::new(cartan::type_d(l), 'D', l)),
            CoxeterType::E6 => Backend::Roots(RootData::new(cartan::type_e(6), 'E', 6)),
            CoxeterType::E7 => Backend::Roots(RootData::new(cartan::type_e(7), 'E', 7)),
            CoxeterType::E8 => Backend::Roots(RootData::new(cartan::type_e(8), 'E', 8)),
            CoxeterType::F4 => Backend::Roots(RootData::new(cartan::type_f4(), 'F', 4)),
        };
        let rank = ctype.rank();
        let mut coxeter_matrix = vec![vec![0u32; rank]; rank];
        for i in 0..rank {
            for j in 0..rank {
                coxeter_matrix[i][j] = match (&backend, i == j) {
                    (_, true) => 1,
                    (Backend::Dihedral(d), false) => d.m as u32,
                    (Backend::Roots(r), false) => match r.cartan[i][j] * r.cartan[j][i] {
                        0 => 2,
                        1 => 3,
                        2 => 4,
                        3 => 6,
                        other => panic!("invalid Cartan product {other}"),
                    },
                };
            }
        }
        Ok(CoxeterSystem {
            ctype,
            backend,
            coxeter_matrix,
        })
    }

    pub fn from_name(name: &str, rank: usize) -> Result<CoxeterSystem, CoxeterError> {
        CoxeterSystem::new(CoxeterType::parse(name, rank)?)
    }

    pub fn ctype(&self) -> CoxeterType {
        self.ctype
    }

    pub fn rank(&self) -> usize {
        self.ctype.rank()
    }

    /// Order `m_ij` of `s_i s_j` (1-based labels).
    pub fn coxeter_m(&self, i: u8, j: u8) -> u32 {
        self.coxeter_matrix[i as usize - 1][j as usize - 1]
    }

    pub fn num_positive_roots(&self) -> usize {
        match &self.backend {
            Backend::Roots(r) => r.pos_roots.len(),
            Backend::Dihedral(d) => d.m,
        }
    }

    pub fn check_label(&self, s: u8) -> Result<(), CoxeterError> {
        if s == 0 || s as usize > self.rank() {
            return Err(CoxeterError::BadLabel {
                label: s,
                rank: self.rank(),
            });
        }
        Ok(())
    }

    pub fn identity(&self) -> Element {
        match &self.backend {
            Backend::Roots(r) => {
                let mut m = vec![0i64; r.rank * r.rank];
                for i in 0..r.rank {
                    m[i * r.rank + i] = 1;
                }
                Element::Mat {
                    minv: m.clone(),
                    m,
                }
            }
            Backend::Dihedral(_) => Element::Dih { refl: false, k: 0 },
        }
    }

    pub fn is_identity(&self, e: &Element) -> bool {
        e == &self.identity()
    }

    /// Left multiplication by generator `s` (1-based).
    pub fn apply_left(&self, s: u8, e: &Element) -> Element {
        match (&self.backend, e) {
            (Backend::Roots(r), Element::Mat { m, minv }) => {
                let g = &r.gen_mats[s as usize - 1];
                Element::Mat {
                    m: mat_mul(r.rank, g, m),
                    minv: mat_mul(r.rank, minv, g),
                }
            }
            (Backend::Dihedral(d), Element::Dih { refl, k }) => {
                // s1 = refl 0, s2 = refl 1; (refl a)·(rot k) = refl a-k,
                // (refl a)·(refl b) = rot a-b
                let a = if s == 1 { 0 } else { 1 };
                if *refl {
                    Element::Dih {
                        refl: false,
                        k: (a + d.m - *k) % d.m,
                    }
                } else {
                    Element::Dih {
                        refl: true,
                        k: (a + d.m - *k) % d.m,
                    }
                }
            }
            _ => unreachable!("element does not belong to this system"),
        }
    }

    /// Right multiplication by generator `s` (1-based).
    pub fn apply_right(&self, e: &Element, s: u8) -> Element {
        match (&self.backend, e) {
            (Backend::Roots(r), Element::Mat { m, minv }) => {
                let g = &r.gen_mats[s as usize - 1];
                Element::Mat {
                    m: mat_mul(r.rank, m, g),
                    minv: mat_mul(r.rank, g, minv),
                }
            }
            (Backend::Dihedral(d), Element::Dih { refl, k }) => {
                let a = if s == 1 { 0 } else { 1 };
                // (rot k)·(refl a) = refl k+a; (refl k)·(refl a) = rot k-a
                if *refl {
                    Element::Dih {
                        refl: false,
                        k: (*k + d.m - a) % d.m,
                    }
                } else {
                    Element::Dih {
                        refl: true,
                        k: (*k + a) % d.m,
                    }
                }
            }
            _ => unreachable!("element does not belong to this system"),
        }
    }

    pub fn element_of_word(&self, w: &Word) -> Result<Element, CoxeterError> {
        let mut e = self.identity();
        for &s in w.letters().iter().rev() {
            self.check_label(s)?;
            e = self.apply_left(s, &e);
        }
        Ok(e)
    }

    /// Length of an element: the number of positive roots its action
    /// sends negative (dihedral: table lookup).
    pub fn length_of_element(&self, e: &Element) -> usize {
        match (&self.backend, e) {
            (Backend::Roots(r), Element::Mat { m, .. }) => {
                let rank = r.rank;
                r.pos_roots
                    .iter()
                    .filter(|root| {
                        // image coordinates; a root is negative iff all ≤ 0
                        (0..rank).all(|i| {
                            (0..rank).map(|j| m[i * rank + j] * root[j]).sum::<i64>() <= 0
                        })
                    })
                    .count()
            }
            (Backend::Dihedral(d), Element::Dih { refl, k }) => {
                d.lengths[*refl as usize * d.m + k] as usize
            }
            _ => unreachable!(),
        }
    }

    /// `ℓ(s·e) < ℓ(e)`: for matrices, `e^{-1}(α_s)` is a negative root.
    pub fn is_left_descent(&self, s: u8, e: &Element) -> bool {
        match (&self.backend, e) {
            (Backend::Roots(r), Element::Mat { minv, .. }) => {
                let rank = r.rank;
                let col = s as usize - 1;
                (0..rank).all(|i| minv[i * rank + col] <= 0)
            }
            (Backend::Dihedral(_), _) => {
                self.length_of_element(&self.apply_left(s, e)) < self.length_of_element(e)
            }
            _ => unreachable!(),
        }
    }

    /// Length of a word's element.
    pub fn length(&self, w: &Word) -> Result<usize, CoxeterError> {
        Ok(self.length_of_element(&self.element_of_word(w)?))
    }

    pub fn is_reduced(&self, w: &Word) -> Result<bool, CoxeterError> {
        Ok(self.length(w)? == w.len())
    }

    /// Lexicographically smallest reduced word: repeatedly strip the
    /// smallest left descent.
    pub fn canonical_word(&self, e: &Element) -> Word {
        let mut cur = e.clone();
        let mut letters = Vec::new();
        while !self.is_identity(&cur) {
            let s = (1..=self.rank() as u8)
                .find(|&s| self.is_left_descent(s, &cur))
                .expect("non-identity element has a left descent");
            letters.push(s);
            cur = self.apply_left(s, &cur);
        }
        Word::from_letters(letters)
    }

    /// Weight-coordinate action of `s` used for parabolic orbits:
    /// `v ← v - v_s · (row s of the Cartan matrix)`.
    pub(crate) fn weight_reflect(&self, s: u8, v: &[i64]) -> Vec<i64> {
        match &self.backend {
            Backend::Roots(r) => {
                let idx = s as usize - 1;
                let c = v[idx];
                let mut out = v.to_vec();
                if c != 0 {
                    for j in 0..r.rank {
                        out[j] -= c * r.cartan[idx][j];
                    }
                }
                out
            }
            Backend::Dihedral(_) => unreachable!("dihedral orbits use element cosets"),
        }
    }

    pub(crate) fn backend(&self) -> &Backend {
        &self.backend
    }
}

impl RootData {
    fn new(cartan: Cartan, letter: char, rank: usize) -> RootData {
        // positive roots: close the simple roots under all reflections,
        // keep the nonnegative ones
        let reflect = |v: &[i64], j: usize| -> Vec<i64> {
            let coeff: i64 = (0..rank).map(|i| v[i] * cartan[i][j]).sum();
            let mut out = v.to_vec();
            out[j] -= coeff;
            out
        };
        let mut roots: Vec<Vec<i64>> = Vec::new();
        let mut seen = std::collections::HashSet::new();
        for i in 0..rank {
            let mut e = vec![0i64; rank];
            e[i] = 1;
            seen.insert(e.clone());
            roots.push(e);
        }
        let mut head = 0;
        while head < roots.len() {
            let cur = roots[head].clone();
            head += 1;
            for j in 0..rank {
                let img = reflect(&cur, j);
                if seen.insert(img.clone()) {
                    roots.push(img);
                }
            }
        }
        let mut pos_roots: Vec<Vec<i64>> = roots
            .into_iter()
            .filter(|r| r.iter().all(|&c| c >= 0))
            .collect();
        pos_roots.sort_unstable();
        assert_eq!(
            pos_roots.len(),
            cartan::positive_root_count(letter, rank),
            "positive root count for {letter}{rank}"
        );
        // generator matrices on root coordinates: s_j changes coordinate j
        let gen_mats: Vec<Vec<i64>> = (0..rank)
            .map(|j| {
                let mut m = vec![0i64; rank * rank];
                for i in 0..rank {
                    m[i * rank + i] = 1;
                }
                // column action: (s_j v)_j = v_j - Σ_i v_i a[i][j]
                for i in 0..rank {
                    m[j * rank + i] -= cartan[i][j];
                }
                m
            })
            .collect();
        RootData {
            rank,
            cartan,
            pos_roots,
            gen_mats,
        }
    }
}

impl DihedralData {
    fn new(m: usize) -> DihedralData {
        // breadth-first lengths over right multiplication by s1, s2
        let total = 2 * m;
        let mut lengths = vec![u32::MAX; total];
        let enc = |refl: bool, k: usize| refl as usize * m + k;
        lengths[enc(false, 0)] = 0;
        let mut queue = std::collections::VecDeque::from([(false, 0usize)]);
        while let Some((refl, k)) = queue.pop_front() {
            let d = lengths[enc(refl, k)];
            for a in [0usize, 1] {
                let next = if refl {
                    (false, (k + m - a) % m)
                } else {
                    (true, (k + a) % m)
                };
                let slot = enc(next.0, next.1);
                if lengths[slot] == u32::MAX {
                    lengths[slot] = d + 1;
                    queue.push_back(next);
                }
            }
        }
        DihedralData { m, lengths }
    }
}
