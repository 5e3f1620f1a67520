//! Multiplicative structure of F_q^x: square roots, n-th roots, roots of
//! unity, element orders.
//!
//! Small fields are searched exhaustively.  Larger fields go through the
//! cyclic structure of F_q^x: a deterministic generator search (first
//! element in enumeration order whose order is q-1), baby-step giant-step
//! discrete logarithms, and Tonelli-Shanks square roots with the
//! non-residue likewise found by deterministic scan.

use std::collections::HashMap;

use super::unipoly::prime_divisors;
use super::{Field, FieldElement};

/// Below this size, unit-group questions are answered by exhaustive scan.
const EXHAUSTIVE_UNIT_CAP: u64 = 10_000;

/// Cap on baby-step giant-step table size (about sqrt(q) entries).
const BSGS_CAP: u64 = 1 << 20;

#[derive(Debug)]
pub(crate) struct UnitGroup {
    /// Prime factorization of q - 1.
    factors: Vec<(u64, u32)>,
    generator: FieldElement,
}

impl Field {
    fn unit_group(&self) -> &UnitGroup {
        self.repr_units().get_or_init(|| {
            let order = self.size() - 1;
            let mut factors = Vec::new();
            let mut n = order;
            let mut d = 2;
            while d * d <= n {
                if n % d == 0 {
                    let mut e = 0;
                    while n % d == 0 {
                        n /= d;
                        e += 1;
                    }
                    factors.push((d, e));
                }
                d += 1;
            }
            if n > 1 {
                factors.push((n, 1));
            }
            let generator = (1..self.size())
                .map(|i| self.element_from_index(i))
                .find(|g| {
                    factors
                        .iter()
                        .all(|&(l, _)| self.pow(g, order / l) != self.one())
                })
                .expect("F_q^x is cyclic");
            UnitGroup { factors, generator }
        })
    }

    /// A fixed generator of F_q^x: the first primitive element in element
    /// enumeration order.
    pub fn unit_generator(&self) -> FieldElement {
        self.unit_group().generator.clone()
    }

    /// Multiplicative order of a nonzero element.
    pub fn element_order(&self, a: &FieldElement) -> u64 {
        assert!(!a.is_zero(), "zero has no multiplicative order");
        let mut order = self.size() - 1;
        for &(l, e) in &self.unit_group().factors {
            for _ in 0..e {
                if self.pow(a, order / l) == self.one() {
                    order /= l;
                } else {
                    break;
                }
            }
        }
        order
    }

    /// Euler criterion; zero counts as a square.
    pub fn is_square(&self, a: &FieldElement) -> bool {
        a.is_zero() || self.pow(a, (self.size() - 1) / 2) == self.one()
    }

    /// The lexicographically least square root, if one exists.
    pub fn sqrt(&self, a: &FieldElement) -> Option<FieldElement> {
        if a.is_zero() {
            return Some(self.zero());
        }
        if self.size() <= EXHAUSTIVE_UNIT_CAP {
            return (0..self.size())
                .map(|i| self.element_from_index(i))
                .find(|x| self.square(x) == *a);
        }
        if !self.is_square(a) {
            return None;
        }
        let r = self.tonelli_shanks(a);
        debug_assert_eq!(self.square(&r), *a);
        Some(r.clone().min(self.neg(&r)))
    }

    fn tonelli_shanks(&self, a: &FieldElement) -> FieldElement {
        let q1 = self.size() - 1;
        let s = q1.trailing_zeros();
        let m = q1 >> s;
        if s == 1 {
            // q = 3 mod 4
            return self.pow(a, (self.size() + 1) / 4);
        }
        // Deterministic non-residue scan.
        let z = (1..self.size())
            .map(|i| self.element_from_index(i))
            .find(|z| !self.is_square(z))
            .expect("half the units are non-residues");
        let mut c = self.pow(&z, m);
        let mut t = self.pow(a, m);
        let mut r = self.pow(a, (m + 1) / 2);
        let mut e = s;
        while t != self.one() {
            let mut i = 0;
            let mut t2 = t.clone();
            while t2 != self.one() {
                t2 = self.square(&t2);
                i += 1;
            }
            let b = (0..e - i - 1).fold(c.clone(), |acc, _| self.square(&acc));
            r = self.mul(&r, &b);
            c = self.square(&b);
            t = self.mul(&t, &c);
            e = i;
        }
        r
    }

    /// All x with x^n = a, sorted.  Exhaustive on small fields; otherwise
    /// solved in the cyclic group F_q^x through a discrete logarithm.
    pub fn nth_roots(&self, a: &FieldElement, n: u64) -> Vec<FieldElement> {
        assert!(n >= 1);
        if a.is_zero() {
            return vec![self.zero()];
        }
        if self.size() <= EXHAUSTIVE_UNIT_CAP {
            let mut out: Vec<FieldElement> = (1..self.size())
                .map(|i| self.element_from_index(i))
                .filter(|x| self.pow(x, n) == *a)
                .collect();
            out.sort();
            return out;
        }
        let order = self.size() - 1;
        let g = self.unit_generator();
        let t = self.discrete_log(a);
        // Solve n*s = t (mod order).
        let d = gcd(n % order, order);
        if t % d != 0 {
            return Vec::new();
        }
        let order_d = order / d;
        let n_d = (n % order) / d;
        let t_d = (t / d) % order_d;
        let s0 = mul_mod(t_d, inv_mod(n_d, order_d), order_d);
        let mut out: Vec<FieldElement> = (0..d)
            .map(|i| self.pow(&g, (s0 + i * order_d) % order))
            .collect();
        out.sort();
        out.dedup();
        out
    }

    /// The set { u : u^n = 1 }, sorted; its size is gcd(n, q - 1).
    pub fn roots_of_unity(&self, n: u64) -> Vec<FieldElement> {
        self.nth_roots(&self.one(), n)
    }

    /// Whether the field contains all n n-th roots of unity.
    pub fn contains_mu(&self, n: u64) -> bool {
        (self.size() - 1) % n == 0
    }

    /// Discrete logarithm base the fixed generator, by baby-step giant-step.
    pub fn discrete_log(&self, a: &FieldElement) -> u64 {
        assert!(!a.is_zero(), "zero is not in the unit group");
        let order = self.size() - 1;
        let m = (order as f64).sqrt().ceil() as u64 + 1;
        assert!(
            m <= BSGS_CAP,
            "discrete log table for {self} exceeds the supported range"
        );
        let g = self.unit_generator();
        let mut baby: HashMap<FieldElement, u64> = HashMap::with_capacity(m as usize);
        let mut cur = self.one();
        for j in 0..m {
            baby.entry(cur.clone()).or_insert(j);
            cur = self.mul(&cur, &g);
        }
        // cur = g^m; giant steps multiply by g^-m.
        let giant = self.inv(&cur).unwrap();
        let mut gamma = a.clone();
        for i in 0..=m {
            if let Some(&j) = baby.get(&gamma) {
                return (i * m + j) % order;
            }
            gamma = self.mul(&gamma, &giant);
        }
        unreachable!("baby-step giant-step covers the whole group")
    }
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    (a as u128 * b as u128 % m as u128) as u64
}

/// Inverse of a mod m for coprime a, m.
fn inv_mod(a: u64, m: u64) -> u64 {
    if m == 1 {
        return 0;
    }
    let (mut t, mut new_t) = (0i128, 1i128);
    let (mut r, mut new_r) = (m as i128, (a % m) as i128);
    while new_r != 0 {
        let q = r / new_r;
        (t, new_t) = (new_t, t - q * new_t);
        (r, new_r) = (new_r, r - q * new_r);
    }
    assert_eq!(r, 1, "not invertible");
    t.rem_euclid(m as i128) as u64
}
