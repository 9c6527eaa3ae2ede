//! Dense polynomials over a small prime field `F_p`, lowest degree first.

use num_bigint::BigUint;
use rand::Rng;

#[derive(Debug, Clone, Copy)]
pub(crate) struct Fp {
    pub p: u64,
}

pub(crate) type PolyP = Vec<u64>;

impl Fp {
    pub fn new(p: u64) -> Self {
        debug_assert!(p < 1 << 32);
        Fp { p }
    }

    pub fn mul(&self, a: u64, b: u64) -> u64 {
        a * b % self.p
    }

    pub fn add(&self, a: u64, b: u64) -> u64 {
        (a + b) % self.p
    }

    pub fn sub(&self, a: u64, b: u64) -> u64 {
        (a + self.p - b) % self.p
    }

    pub fn pow(&self, mut a: u64, mut e: u64) -> u64 {
        let mut acc = 1;
        a %= self.p;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, a);
            }
            a = self.mul(a, a);
            e >>= 1;
        }
        acc
    }

    pub fn inv(&self, a: u64) -> u64 {
        debug_assert!(!a.is_multiple_of(self.p));
        self.pow(a, self.p - 2)
    }

    pub fn trim(&self, mut a: PolyP) -> PolyP {
        while a.last() == Some(&0) {
            a.pop();
        }
        a
    }

    pub fn poly_add(&self, a: &[u64], b: &[u64]) -> PolyP {
        let n = a.len().max(b.len());
        let v = (0..n)
            .map(|i| self.add(*a.get(i).unwrap_or(&0), *b.get(i).unwrap_or(&0)))
            .collect();
        self.trim(v)
    }

    pub fn poly_sub(&self, a: &[u64], b: &[u64]) -> PolyP {
        let n = a.len().max(b.len());
        let v = (0..n)
            .map(|i| self.sub(*a.get(i).unwrap_or(&0), *b.get(i).unwrap_or(&0)))
            .collect();
        self.trim(v)
    }

    pub fn poly_mul(&self, a: &[u64], b: &[u64]) -> PolyP {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let mut out = vec![0u64; a.len() + b.len() - 1];
        for (i, &x) in a.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.iter().enumerate() {
                out[i + j] = (out[i + j] + x * y) % self.p;
            }
        }
        self.trim(out)
    }

    pub fn scale(&self, a: &[u64], c: u64) -> PolyP {
        self.trim(a.iter().map(|&x| self.mul(x, c)).collect())
    }

    pub fn divrem(&self, a: &[u64], b: &[u64]) -> (PolyP, PolyP) {
        assert!(!b.is_empty(), "division by zero polynomial mod p");
        let db = b.len() - 1;
        let mut rem = a.to_vec();
        if rem.len() <= db {
            return (Vec::new(), self.trim(rem));
        }
        let inv = self.inv(b[db]);
        let mut quot = vec![0u64; rem.len() - db];
        for k in (0..quot.len()).rev() {
            let c = self.mul(rem[k + db], inv);
            if c != 0 {
                for (j, &y) in b.iter().enumerate() {
                    rem[k + j] = self.sub(rem[k + j], self.mul(c, y));
                }
            }
            quot[k] = c;
        }
        rem.truncate(db);
        (self.trim(quot), self.trim(rem))
    }

    pub fn rem(&self, a: &[u64], b: &[u64]) -> PolyP {
        self.divrem(a, b).1
    }

    pub fn monic(&self, a: &[u64]) -> PolyP {
        match a.last() {
            None => Vec::new(),
            Some(&lc) => self.scale(a, self.inv(lc)),
        }
    }

    pub fn gcd(&self, a: &[u64], b: &[u64]) -> PolyP {
        let (mut a, mut b) = (self.trim(a.to_vec()), self.trim(b.to_vec()));
        while !b.is_empty() {
            let r = self.rem(&a, &b);
            a = b;
            b = r;
        }
        self.monic(&a)
    }

    /// Returns `(g, s, t)` with `s*a + t*b = g`, `g` monic.
    pub fn xgcd(&self, a: &[u64], b: &[u64]) -> (PolyP, PolyP, PolyP) {
        let (mut r0, mut r1) = (self.trim(a.to_vec()), self.trim(b.to_vec()));
        let (mut s0, mut s1) = (vec![1u64], Vec::new());
        let (mut t0, mut t1) = (Vec::new(), vec![1u64]);
        while !r1.is_empty() {
            let (q, r) = self.divrem(&r0, &r1);
            let s2 = self.poly_sub(&s0, &self.poly_mul(&q, &s1));
            let t2 = self.poly_sub(&t0, &self.poly_mul(&q, &t1));
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s2);
            t0 = std::mem::replace(&mut t1, t2);
        }
        let inv = self.inv(*r0.last().expect("xgcd of two zero polynomials"));
        (
            self.scale(&r0, inv),
            self.scale(&s0, inv),
            self.scale(&t0, inv),
        )
    }

    pub fn derivative(&self, a: &[u64]) -> PolyP {
        self.trim(
            a.iter()
                .enumerate()
                .skip(1)
                .map(|(k, &c)| self.mul(c, k as u64 % self.p))
                .collect(),
        )
    }

    pub fn powmod(&self, base: &[u64], exp: &BigUint, modulus: &[u64]) -> PolyP {
        let mut acc = vec![1u64];
        let base = self.rem(base, modulus);
        for i in (0..exp.bits()).rev() {
            acc = self.rem(&self.poly_mul(&acc, &acc), modulus);
            if exp.bit(i) {
                acc = self.rem(&self.poly_mul(&acc, &base), modulus);
            }
        }
        self.rem(&acc, modulus)
    }

    pub fn is_squarefree(&self, f: &[u64]) -> bool {
        let d = self.derivative(f);
        !d.is_empty() && self.gcd(f, &d).len() == 1
    }

    /// Distinct-degree factorization of a monic squarefree polynomial:
    /// `(product of all irreducible factors of degree d, d)`.
    fn distinct_degree(&self, f: &[u64]) -> Vec<(PolyP, usize)> {
        let mut out = Vec::new();
        let mut f = f.to_vec();
        let x = vec![0u64, 1];
        let p = BigUint::from(self.p);
        let mut h = x.clone();
        let mut d = 0;
        while 2 * (d + 1) < f.len() {
            d += 1;
            h = self.powmod(&h, &p, &f);
            let g = self.gcd(&self.poly_sub(&h, &x), &f);
            if g.len() > 1 {
                f = self.divrem(&f, &g).0;
                h = self.rem(&h, &f);
                out.push((g, d));
            }
        }
        if f.len() > 1 {
            let deg = f.len() - 1;
            out.push((f, deg));
        }
        out
    }

    /// Cantor-Zassenhaus equal-degree splitting; requires odd `p`.
    fn equal_degree<R: Rng>(&self, f: &[u64], d: usize, rng: &mut R, out: &mut Vec<PolyP>) {
        let n = f.len() - 1;
        if n == d {
            out.push(f.to_vec());
            return;
        }
        let exp = (BigUint::from(self.p).pow(d as u32) - 1u32) / 2u32;
        loop {
            let a: PolyP = self.trim((0..n).map(|_| rng.gen_range(0..self.p)).collect());
            if a.len() < 2 {
                continue;
            }
            let b = self.poly_sub(&self.powmod(&a, &exp, f), &[1]);
            let g = self.gcd(&b, f);
            if g.len() > 1 && g.len() < f.len() {
                let h = self.divrem(f, &g).0;
                self.equal_degree(&g, d, rng, out);
                self.equal_degree(&self.monic(&h), d, rng, out);
                return;
            }
        }
    }

    /// Monic irreducible factors of a monic squarefree polynomial.
    pub fn factor_squarefree<R: Rng>(&self, f: &[u64], rng: &mut R) -> Vec<PolyP> {
        let mut out = Vec::new();
        for (g, d) in self.distinct_degree(f) {
            self.equal_degree(&g, d, rng, &mut out);
        }
        out.sort();
        out
    }
}
