//! Minimal coset and double-coset representatives for the maximal
//! parabolic subgroup obtained by dropping one generator.
//!
//! Cosets `wW'` correspond to the orbit of the dropped node's fundamental
//! weight (crystallographic types) or to the element pairs `{w, ws}`
//! (dihedral). A breadth-first search from the base point finds each
//! coset at the depth of its minimal representative; double cosets are
//! the orbits of the remaining generators acting on the cosets, and each
//! class representative is reported as the lexicographically smallest
//! reduced word of its unique minimal element.

use std::collections::{HashMap, VecDeque};

use crate::system::{Backend, CoxeterSystem, Element};
use crate::word::Word;
use crate::CoxeterError;

#[derive(Clone, Debug)]
pub struct DcClass {
    /// Lex-smallest reduced word of the minimal element of the class.
    pub rep: Word,
    /// Coset index of the minimal representative.
    pub rep_coset: usize,
    /// All coset indices in the class, ascending.
    pub cosets: Vec<usize>,
}

pub struct ParabolicDoubleCosets {
    dropped: u8,
    coset_reps: Vec<Word>,
    coset_elements: Vec<Element>,
    depths: Vec<u32>,
    /// `action[s-1][c]` = index of the coset `s · c` (orbit graph).
    action: Vec<Vec<u32>>,
    classes: Vec<DcClass>,
}

impl ParabolicDoubleCosets {
    pub fn dropped(&self) -> u8 {
        self.dropped
    }

    pub fn coset_count(&self) -> usize {
        self.coset_reps.len()
    }

    pub fn coset_reps(&self) -> &[Word] {
        &self.coset_reps
    }

    pub fn coset_element(&self, c: usize) -> &Element {
        &self.coset_elements[c]
    }

    pub fn depth(&self, c: usize) -> usize {
        self.depths[c] as usize
    }

    pub fn coset_action(&self, s: u8, c: usize) -> usize {
        self.action[s as usize - 1][c] as usize
    }

    pub fn classes(&self) -> &[DcClass] {
        &self.classes
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
enum Point {
    Weight(Vec<i64>),
    Coset(Element),
}

/// Canonical point for the coset of `e`: the weight vector `e(ω_r)`, or
/// for dihedral systems the smaller of `{e, e·s_other}`.
fn base_point(sys: &CoxeterSystem, r: u8) -> Point {
    match sys.backend() {
        Backend::Roots(data) => {
            let mut v = vec![0i64; data.rank];
            v[r as usize - 1] = 1;
            Point::Weight(v)
        }
        Backend::Dihedral(_) => Point::Coset(sys.identity()),
    }
}

fn dihedral_key(e: &Element) -> (bool, usize) {
    match e {
        Element::Dih { refl, k } => (*refl, *k),
        _ => unreachable!(),
    }
}

fn act(sys: &CoxeterSystem, r: u8, s: u8, p: &Point) -> Point {
    match p {
        Point::Weight(v) => Point::Weight(sys.weight_reflect(s, v)),
        Point::Coset(e) => {
            let other = if r == 1 { 2 } else { 1 };
            let a = sys.apply_left(s, e);
            let b = sys.apply_right(&a, other);
            Point::Coset(if dihedral_key(&a) <= dihedral_key(&b) { a } else { b })
        }
    }
}

/// Breadth-first enumeration of the cosets of the maximal parabolic that
/// omits generator `r`, with minimal representatives and the orbit graph.
pub fn min_coset_reps(
    sys: &CoxeterSystem,
    r: u8,
) -> Result<ParabolicDoubleCosets, CoxeterError> {
    sys.check_label(r)?;
    let rank = sys.rank();
    let base = match sys.backend() {
        Backend::Roots(_) => base_point(sys, r),
        Backend::Dihedral(_) => {
            // canonicalize the identity coset
            let other = if r == 1 { 2 } else { 1 };
            let id = sys.identity();
            let alt = sys.apply_right(&id, other);
            Point::Coset(if dihedral_key(&id) <= dihedral_key(&alt) { id } else { alt })
        }
    };
    let mut index: HashMap<Point, usize> = HashMap::new();
    index.insert(base.clone(), 0);
    let mut points = vec![base];
    let mut elements = vec![sys.identity()];
    let mut depths = vec![0u32];
    let mut action: Vec<Vec<u32>> = vec![Vec::new(); rank];
    let mut queue = VecDeque::from([0usize]);
    while let Some(c) = queue.pop_front() {
        for s in 1..=rank as u8 {
            let img = act(sys, r, s, &points[c]);
            let next = match index.get(&img) {
                Some(&i) => i,
                None => {
                    let i = points.len();
                    index.insert(img.clone(), i);
                    points.push(img);
                    elements.push(sys.apply_left(s, &elements[c]));
                    depths.push(depths[c] + 1);
                    queue.push_back(i);
                    i
                }
            };
            let col = &mut action[s as usize - 1];
            if col.len() <= c {
                col.resize(c + 1, u32::MAX);
            }
            col[c] = next as u32;
        }
    }
    let count = points.len();
    for col in &mut action {
        col.resize(count, u32::MAX);
        debug_assert!(col.iter().all(|&v| v != u32::MAX));
    }
    let coset_reps: Vec<Word> = elements.iter().map(|e| sys.canonical_word(e)).collect();
    for (c, w) in coset_reps.iter().enumerate() {
        debug_assert_eq!(w.len(), depths[c] as usize);
    }
    Ok(ParabolicDoubleCosets {
        dropped: r,
        coset_reps,
        coset_elements: elements,
        depths,
        action,
        classes: Vec::new(),
    })
}

/// [`min_coset_reps`] plus the double-coset classes: orbits of the
/// retained generators on the cosets. In every class the minimal element
/// is unique, so the minimal-depth coset identifies the representative.
pub fn double_coset_reps(
    sys: &CoxeterSystem,
    r: u8,
) -> Result<ParabolicDoubleCosets, CoxeterError> {
    let mut layer = min_coset_reps(sys, r)?;
    let count = layer.coset_count();
    let mut class_of = vec![usize::MAX; count];
    let mut classes: Vec<DcClass> = Vec::new();
    for start in 0..count {
        if class_of[start] != usize::MAX {
            continue;
        }
        let idx = classes.len();
        let mut members = vec![start];
        class_of[start] = idx;
        let mut head = 0;
        while head < members.len() {
            let c = members[head];
            head += 1;
            for s in 1..=sys.rank() as u8 {
                if s == r {
                    continue;
                }
                let img = layer.coset_action(s, c);
                if class_of[img] == usize::MAX {
                    class_of[img] = idx;
                    members.push(img);
                }
            }
        }
        members.sort_unstable();
        let rep_coset = members[0];
        classes.push(DcClass {
            rep: layer.coset_reps[rep_coset].clone(),
            rep_coset,
            cosets: members,
        });
    }
    let total: usize = classes.iter().map(|c| c.cosets.len()).sum();
    assert_eq!(total, count, "classes must partition the cosets");
    layer.classes = classes;
    Ok(layer)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::system::CoxeterType;

    fn reps(t: CoxeterType, r: u8) -> Vec<String> {
        let sys = CoxeterSystem::new(t).unwrap();
        double_coset_reps(&sys, r)
            .unwrap()
            .classes()
            .iter()
            .map(|c| c.rep.to_string())
            .collect()
    }

    #[test]
    fn a2_coset_words() {
        let sys = CoxeterSystem::new(CoxeterType::A(2)).unwrap();
        let layer = min_coset_reps(&sys, 2).unwrap();
        let words: Vec<String> = layer.coset_reps().iter().map(|w| w.to_string()).collect();
        assert_eq!(words, vec!["ε", "2", "12"]);
    }

    #[test]
    fn coset_counts() {
        let f4 = CoxeterSystem::new(CoxeterType::F4).unwrap();
        assert_eq!(min_coset_reps(&f4, 4).unwrap().coset_count(), 24);
        let e8 = CoxeterSystem::new(CoxeterType::E8).unwrap();
        assert_eq!(min_coset_reps(&e8, 8).unwrap().coset_count(), 240);
    }

    #[test]
    fn dihedral_classes() {
        assert_eq!(reps(CoxeterType::I2(3), 1), vec!["ε", "1"]);
        assert_eq!(reps(CoxeterType::I2(4), 1), vec!["ε", "1", "121"]);
        assert_eq!(reps(CoxeterType::I2(6), 1), vec!["ε", "1", "121", "12121"]);
    }

    #[test]
    fn minimality_of_coset_reps() {
        // every rep w has length(w·s) > length(w) for all retained s
        for (t, r) in [(CoxeterType::A(3), 3u8), (CoxeterType::B(3), 3), (CoxeterType::F4, 4)] {
            let sys = CoxeterSystem::new(t).unwrap();
            let layer = min_coset_reps(&sys, r).unwrap();
            for c in 0..layer.coset_count() {
                let e = layer.coset_element(c);
                let l = sys.length_of_element(e);
                for s in 1..=sys.rank() as u8 {
                    if s == r {
                        continue;
                    }
                    let longer = sys.length_of_element(&sys.apply_right(e, s));
                    assert!(longer > l, "{t:?} coset {c} not minimal at s={s}");
                }
            }
        }
    }
}
