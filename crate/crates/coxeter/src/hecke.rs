//! Products of parabolic double cosets in the 0-Hecke sense.
//!
//! For reduced words `w`, `u`, the set `P(w, u)` of elements `v` whose
//! Borel double coset lies inside the product of the two given ones is
//! computed by peeling `w` from the left:
//!
//! ```text
//! P(ε, u)    = {u}
//! P(s·w', u) = ∪_{v ∈ P(w', u)}  {s·v}            if ℓ(s·v) > ℓ(v)
//!                                {s·v, v}          otherwise
//! ```

use std::collections::HashSet;

use crate::system::{CoxeterSystem, Element};
use crate::word::Word;
use crate::CoxeterError;

/// Default cap on the element-set size.
pub const DEFAULT_SET_CAP: usize = 1_000_000;

/// The set as elements, for membership tests.
pub fn hecke_product_elements(
    sys: &CoxeterSystem,
    w: &Word,
    u: &Word,
    cap: usize,
) -> Result<HashSet<Element>, CoxeterError> {
    if !sys.is_reduced(w)? {
        return Err(CoxeterError::NotReduced(w.to_string()));
    }
    if !sys.is_reduced(u)? {
        return Err(CoxeterError::NotReduced(u.to_string()));
    }
    let mut set = HashSet::new();
    set.insert(sys.element_of_word(u)?);
    for &s in w.letters().iter().rev() {
        let mut next = HashSet::with_capacity(set.len() * 2);
        for v in &set {
            let sv = sys.apply_left(s, v);
            if sys.is_left_descent(s, v) {
                // ℓ(s·v) < ℓ(v): the product picks up both cosets
                next.insert(sv);
                next.insert(v.clone());
            } else {
                next.insert(sv);
            }
            if next.len() > cap {
                return Err(CoxeterError::SetTooLarge { cap });
            }
        }
        set = next;
    }
    Ok(set)
}

/// The set as canonical reduced words, sorted by length then letters.
pub fn hecke_product_set(
    sys: &CoxeterSystem,
    w: &Word,
    u: &Word,
    cap: usize,
) -> Result<Vec<Word>, CoxeterError> {
    let elems = hecke_product_elements(sys, w, u, cap)?;
    let mut words: Vec<Word> = elems.iter().map(|e| sys.canonical_word(e)).collect();
    words.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    Ok(words)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::system::CoxeterType;

    fn word(s: &str) -> Word {
        s.parse().unwrap()
    }

    #[test]
    fn single_generator_square() {
        let a2 = CoxeterSystem::new(CoxeterType::A(2)).unwrap();
        let out = hecke_product_set(&a2, &word("1"), &word("1"), 100).unwrap();
        let strings: Vec<String> = out.iter().map(|w| w.to_string()).collect();
        assert_eq!(strings, vec!["ε", "1"]);
    }

    #[test]
    fn reduced_concatenation_collapses() {
        // (BwB)(BuB) = BwuB whenever wu is reduced
        let a3 = CoxeterSystem::new(CoxeterType::A(3)).unwrap();
        let out = hecke_product_set(&a3, &word("12"), &word("3"), 100).unwrap();
        assert_eq!(out.len(), 1);
        assert_eq!(out[0].to_string(), "123");
    }

    #[test]
    fn longest_element_squared_covers_a2() {
        let a2 = CoxeterSystem::new(CoxeterType::A(2)).unwrap();
        let out = hecke_product_set(&a2, &word("121"), &word("121"), 100).unwrap();
        assert_eq!(out.len(), 6);
    }

    #[test]
    fn commuting_products_agree() {
        // (BwB)(BuB) = (BuB)(BwB) when wu = uw is reduced
        let a3 = CoxeterSystem::new(CoxeterType::A(3)).unwrap();
        let xy = hecke_product_set(&a3, &word("1"), &word("3"), 100).unwrap();
        let yx = hecke_product_set(&a3, &word("3"), &word("1"), 100).unwrap();
        assert_eq!(xy, yx);
        let d4 = CoxeterSystem::new(CoxeterType::D(4)).unwrap();
        let xy = hecke_product_set(&d4, &word("12"), &word("12"), 1000).unwrap();
        let yx = hecke_product_set(&d4, &word("21"), &word("12"), 1000).unwrap();
        assert_eq!(xy, yx);
    }

    #[test]
    fn cap_is_enforced() {
        let a3 = CoxeterSystem::new(CoxeterType::A(3)).unwrap();
        let w = word("121321");
        assert!(matches!(
            hecke_product_elements(&a3, &w, &w, 3),
            Err(CoxeterError::SetTooLarge { cap: 3 })
        ));
    }
}
