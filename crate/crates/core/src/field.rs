//! Small finite fields `GF(p^k)` with exhaustive tables, `q ≤ 16`.
//!
//! Elements are encoded as integers `0..q` whose base-`p` digits are the
//! polynomial coefficients (little-endian). Each prime power uses a fixed
//! irreducible polynomial, so element numbering is reproducible:
//! `GF(4): x²+x+1`, `GF(8): x³+x+1`, `GF(9): x²+1`, `GF(16): x⁴+x+1`.
//! Field axioms are verified exhaustively at construction.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum FieldError {
    #[error("unsupported field order {0} (prime powers up to 16)")]
    UnsupportedQ(usize),
}

#[derive(Clone)]
pub struct FiniteField {
    p: usize,
    k: u32,
    q: usize,
    add: Vec<u8>,
    mul: Vec<u8>,
    inv: Vec<u8>,
    neg: Vec<u8>,
}

impl FiniteField {
    pub fn new(q: usize) -> Result<Self, FieldError> {
        let (p, k, modulus) = match q {
            2 | 3 | 5 | 7 | 11 | 13 => (q, 1, 0usize),
            4 => (2, 2, 0b111),      // x^2 + x + 1
            8 => (2, 3, 0b1011),     // x^3 + x + 1
            9 => (3, 2, 10),         // x^2 + 1 (digits 1,0,1 base 3)
            16 => (2, 4, 0b10011),   // x^4 + x + 1
            _ => return Err(FieldError::UnsupportedQ(q)),
        };
        let digits = |mut v: usize| -> Vec<usize> {
            let mut d = vec![0; 2 * k as usize + 1];
            for slot in d.iter_mut() {
                *slot = v % p;
                v /= p;
            }
            d
        };
        let undigits = |d: &[usize]| -> usize {
            d.iter().rev().fold(0, |acc, &x| acc * p + x)
        };
        let add_tab: Vec<u8> = (0..q * q)
            .map(|i| {
                let (a, b) = (digits(i / q), digits(i % q));
                let sum: Vec<usize> = a.iter().zip(&b).map(|(x, y)| (x + y) % p).collect();
                undigits(&sum) as u8
            })
            .collect();
        let neg_tab: Vec<u8> = (0..q)
            .map(|v| {
                let d: Vec<usize> = digits(v).iter().map(|&x| (p - x) % p).collect();
                undigits(&d) as u8
            })
            .collect();
        let mul_one = |a: usize, b: usize| -> usize {
            if k == 1 {
                return a * b % p;
            }
            // polynomial product, then reduce by the monic modulus
            let (da, db) = (digits(a), digits(b));
            let mut prod = vec![0usize; 2 * k as usize + 1];
            for (i, &x) in da.iter().enumerate().take(k as usize) {
                for (j, &y) in db.iter().enumerate().take(k as usize) {
                    prod[i + j] = (prod[i + j] + x * y) % p;
                }
            }
            let dm = digits(modulus);
            for deg in (k as usize..prod.len()).rev() {
                let c = prod[deg];
                if c == 0 {
                    continue;
                }
                prod[deg] = 0;
                for (j, &m) in dm.iter().enumerate().take(k as usize) {
                    // modulus is monic of degree k: x^deg = -(lower terms)·x^(deg-k)
                    let idx = deg - k as usize + j;
                    prod[idx] = (prod[idx] + c * (p - m) % p) % p;
                }
            }
            undigits(&prod)
        };
        let mul_tab: Vec<u8> = (0..q * q).map(|i| mul_one(i / q, i % q) as u8).collect();
        let mut inv_tab = vec![0u8; q];
        for a in 1..q {
            let inv = (1..q).find(|&b| mul_tab[a * q + b] == 1);
            inv_tab[a] = inv.ok_or(FieldError::UnsupportedQ(q))? as u8;
        }
        let f = FiniteField {
            p,
            k,
            q,
            add: add_tab,
            mul: mul_tab,
            inv: inv_tab,
            neg: neg_tab,
        };
        f.verify_axioms();
        Ok(f)
    }

    fn verify_axioms(&self) {
        let q = self.q;
        for a in 0..q {
            assert_eq!(self.add(a, 0), a);
            assert_eq!(self.mul(a, 1), a);
            assert_eq!(self.add(a, self.neg(a)), 0);
            if a != 0 {
                assert_eq!(self.mul(a, self.inv(a)), 1);
            }
            for b in 0..q {
                assert_eq!(self.add(a, b), self.add(b, a));
                assert_eq!(self.mul(a, b), self.mul(b, a));
                for c in 0..q {
                    assert_eq!(self.add(self.add(a, b), c), self.add(a, self.add(b, c)));
                    assert_eq!(self.mul(self.mul(a, b), c), self.mul(a, self.mul(b, c)));
                    assert_eq!(
                        self.mul(a, self.add(b, c)),
                        self.add(self.mul(a, b), self.mul(a, c))
                    );
                }
            }
        }
    }

    pub fn q(&self) -> usize {
        self.q
    }

    pub fn characteristic(&self) -> usize {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.k
    }

    #[inline]
    pub fn add(&self, a: usize, b: usize) -> usize {
        self.add[a * self.q + b] as usize
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.q + b] as usize
    }

    pub fn neg(&self, a: usize) -> usize {
        self.neg[a] as usize
    }

    pub fn sub(&self, a: usize, b: usize) -> usize {
        self.add(a, self.neg(b))
    }

    /// Multiplicative inverse; `a` must be nonzero.
    pub fn inv(&self, a: usize) -> usize {
        debug_assert_ne!(a, 0);
        self.inv[a] as usize
    }

    pub fn pow(&self, a: usize, e: usize) -> usize {
        let mut acc = 1;
        for _ in 0..e {
            acc = self.mul(acc, a);
        }
        acc
    }

    /// Smallest generator of the multiplicative group.
    pub fn primitive_element(&self) -> usize {
        (1..self.q)
            .find(|&g| {
                let mut seen = 0usize;
                let mut cur = 1;
                loop {
                    cur = self.mul(cur, g);
                    seen += 1;
                    if cur == 1 {
                        break;
                    }
                }
                seen == self.q - 1
            })
            .expect("multiplicative group of a finite field is cyclic")
    }

    /// The set `{ t² : t ∈ K* }`, sorted.
    pub fn nonzero_squares(&self) -> Vec<usize> {
        let mut v: Vec<usize> = (1..self.q).map(|t| self.mul(t, t)).collect();
        v.sort_unstable();
        v.dedup();
        v
    }
}
