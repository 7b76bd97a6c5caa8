//! Dancing-links exact cover (Algorithm X).
//!
//! Column choice is minimum-remaining-values with ties broken by lowest
//! column index; rows are tried in insertion order, so searches are fully
//! deterministic. The solver counts a node per row choice and stops with
//! [`SolveOutcome::Budget`] once the caller's node limit is spent.

#[derive(Debug, PartialEq, Eq)]
pub enum SolveOutcome {
    /// Rows (in insertion ids) forming the first exact cover found.
    Solution(Vec<usize>),
    /// The full tree was exhausted without a cover.
    Exhausted,
    /// The node budget ran out before the tree was exhausted.
    Budget,
}

pub struct Dlx {
    // node links; indices 1..=cols are column headers, 0 is the root
    left: Vec<u32>,
    right: Vec<u32>,
    up: Vec<u32>,
    down: Vec<u32>,
    col: Vec<u32>,
    row_of: Vec<u32>,
    size: Vec<u32>,
    cols: usize,
    rows: usize,
}

impl Dlx {
    pub fn new(cols: usize) -> Self {
        let mut d = Dlx {
            left: Vec::with_capacity(cols + 1),
            right: Vec::with_capacity(cols + 1),
            up: Vec::with_capacity(cols + 1),
            down: Vec::with_capacity(cols + 1),
            col: Vec::with_capacity(cols + 1),
            row_of: Vec::with_capacity(cols + 1),
            size: vec![0; cols + 1],
            cols,
            rows: 0,
        };
        for i in 0..=cols {
            d.left.push(if i == 0 { cols as u32 } else { (i - 1) as u32 });
            d.right.push(if i == cols { 0 } else { (i + 1) as u32 });
            d.up.push(i as u32);
            d.down.push(i as u32);
            d.col.push(i as u32);
            d.row_of.push(u32::MAX);
        }
        d
    }

    /// Adds a row covering the given columns (0-based); returns its row id.
    pub fn add_row(&mut self, cols: &[usize]) -> usize {
        debug_assert!(!cols.is_empty());
        let row = self.rows;
        self.rows += 1;
        let first = self.left.len() as u32;
        for (k, &c) in cols.iter().enumerate() {
            debug_assert!(c < self.cols);
            let header = (c + 1) as u32;
            let node = self.left.len() as u32;
            // horizontal links within the row
            let prev = if k == 0 { node } else { node - 1 };
            self.left.push(prev);
            self.right.push(first);
            if k > 0 {
                self.right[prev as usize] = node;
            }
            // vertical insertion above the header
            let above = self.up[header as usize];
            self.up.push(above);
            self.down.push(header);
            self.down[above as usize] = node;
            self.up[header as usize] = node;
            self.col.push(header);
            self.row_of.push(row as u32);
            self.size[header as usize - 1] += 1;
        }
        // close the horizontal cycle
        self.left[first as usize] = (self.left.len() - 1) as u32;
        row
    }

    fn cover(&mut self, header: u32) {
        let (l, r) = (self.left[header as usize], self.right[header as usize]);
        self.right[l as usize] = r;
        self.left[r as usize] = l;
        let mut i = self.down[header as usize];
        while i != header {
            let mut j = self.right[i as usize];
            while j != i {
                let (u, d) = (self.up[j as usize], self.down[j as usize]);
                self.down[u as usize] = d;
                self.up[d as usize] = u;
                self.size[self.col[j as usize] as usize - 1] -= 1;
                j = self.right[j as usize];
            }
            i = self.down[i as usize];
        }
    }

    fn uncover(&mut self, header: u32) {
        let mut i = self.up[header as usize];
        while i != header {
            let mut j = self.left[i as usize];
            while j != i {
                let (u, d) = (self.up[j as usize], self.down[j as usize]);
                self.down[u as usize] = j;
                self.up[d as usize] = j;
                self.size[self.col[j as usize] as usize - 1] += 1;
                j = self.left[j as usize];
            }
            i = self.up[i as usize];
        }
        let (l, r) = (self.left[header as usize], self.right[header as usize]);
        self.right[l as usize] = header;
        self.left[r as usize] = header;
    }

    /// Finds the first exact cover within the node budget.
    pub fn solve_first(&mut self, budget: u64) -> SolveOutcome {
        let mut stack = Vec::new();
        let mut remaining = budget;
        match self.descend(&mut stack, &mut remaining) {
            Status::Found => SolveOutcome::Solution(stack),
            Status::Exhausted => SolveOutcome::Exhausted,
            Status::Budget => SolveOutcome::Budget,
        }
    }

    fn descend(&mut self, stack: &mut Vec<usize>, remaining: &mut u64) -> Status {
        if self.right[0] == 0 {
            return Status::Found;
        }
        // MRV column, ties by lowest index
        let mut best = u32::MAX;
        let mut best_size = u32::MAX;
        let mut h = self.right[0];
        while h != 0 {
            let s = self.size[h as usize - 1];
            if s < best_size {
                best_size = s;
                best = h;
            }
            h = self.right[h as usize];
        }
        if best_size == 0 {
            return Status::Exhausted;
        }
        let header = best;
        self.cover(header);
        let mut i = self.down[header as usize];
        let mut out = Status::Exhausted;
        while i != header {
            if *remaining == 0 {
                out = Status::Budget;
                break;
            }
            *remaining -= 1;
            stack.push(self.row_of[i as usize] as usize);
            let mut j = self.right[i as usize];
            while j != i {
                self.cover(self.col[j as usize]);
                j = self.right[j as usize];
            }
            let st = self.descend(stack, remaining);
            if st == Status::Found {
                // unwind links but keep the solution stack intact
                let mut j = self.left[i as usize];
                while j != i {
                    self.uncover(self.col[j as usize]);
                    j = self.left[j as usize];
                }
                out = Status::Found;
                break;
            }
            let mut j = self.left[i as usize];
            while j != i {
                self.uncover(self.col[j as usize]);
                j = self.left[j as usize];
            }
            stack.pop();
            if st == Status::Budget {
                out = Status::Budget;
                break;
            }
            i = self.down[i as usize];
        }
        self.uncover(header);
        out
    }
}

#[derive(PartialEq, Eq, Clone, Copy)]
enum Status {
    Found,
    Exhausted,
    Budget,
}
