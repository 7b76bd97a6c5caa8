//! Text formats for groups.
//!
//! Cayley table file: first line `n`, then `n` whitespace-separated rows
//! of `n` integers (0-based element ids).
//!
//! Permutation file: first line the degree `d`, each later nonempty line
//! one generator in disjoint-cycle notation such as `(0 1 2)(3 4)`;
//! fixed points are omitted.

use crate::group::{Group, GroupError};
use crate::perm;

pub fn read_cayley_table(text: &str) -> Result<Group, GroupError> {
    let mut lines = text.lines().filter(|l| !l.trim().is_empty());
    let n: usize = lines
        .next()
        .ok_or_else(|| GroupError::Parse("empty cayley file".into()))?
        .trim()
        .parse()
        .map_err(|_| GroupError::Parse("first line must be the order".into()))?;
    let mut table = Vec::with_capacity(n);
    for _ in 0..n {
        let line = lines
            .next()
            .ok_or_else(|| GroupError::Parse(format!("expected {n} table rows")))?;
        let row: Result<Vec<usize>, _> = line.split_whitespace().map(|t| t.parse()).collect();
        table.push(row.map_err(|_| GroupError::Parse(format!("bad integer in row {line:?}")))?);
    }
    if lines.next().is_some() {
        return Err(GroupError::Parse("trailing content after table".into()));
    }
    Group::from_cayley_table(&table)
}

pub fn read_permutation_group(text: &str) -> Result<Group, GroupError> {
    let mut lines = text.lines().filter(|l| !l.trim().is_empty());
    let degree: usize = lines
        .next()
        .ok_or_else(|| GroupError::Parse("empty permutation file".into()))?
        .trim()
        .parse()
        .map_err(|_| GroupError::Parse("first line must be the degree".into()))?;
    let mut gens = Vec::new();
    for line in lines {
        gens.push(perm::parse_cycles(line, degree)?);
    }
    Group::from_permutations(degree, &gens)
}
