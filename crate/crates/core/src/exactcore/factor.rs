//! Factorization over `Q`: squarefree decomposition, then Zassenhaus
//! (Cantor-Zassenhaus mod a small prime, linear Hensel lifting, subset
//! recombination) on each squarefree part.

use itertools::Itertools;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::modp::{Fp, PolyP};
use super::poly::Poly;
use super::rational::Rational;
use crate::error::{Error, Result};

/// `unit * prod(factor^multiplicity)` with monic irreducible factors in
/// canonical order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factorization {
    pub unit: Rational,
    pub factors: Vec<(Poly, u32)>,
}

impl Factorization {
    pub fn expand(&self) -> Poly {
        self.factors
            .iter()
            .fold(Poly::constant(self.unit.clone()), |acc, (f, e)| {
                &acc * &f.pow(*e)
            })
    }
}

/// Yun's algorithm on the monic associate of `p`: pairwise coprime monic
/// squarefree parts with their multiplicities.
pub fn squarefree_decomposition(p: &Poly) -> Vec<(Poly, u32)> {
    let f = p.monic();
    if f.is_constant() {
        return Vec::new();
    }
    let df = f.derivative();
    let a0 = f.gcd(&df);
    let mut b = f.exact_div(&a0).unwrap();
    let c = df.exact_div(&a0).unwrap();
    let mut d = &c - &b.derivative();
    let mut out = Vec::new();
    let mut i = 1;
    while !b.is_constant() {
        let a = b.gcd(&d);
        b = b.exact_div(&a).unwrap();
        let c = d.exact_div(&a).unwrap();
        d = &c - &b.derivative();
        if !a.is_constant() {
            out.push((a, i));
        }
        i += 1;
    }
    out
}

pub fn factor_poly(p: &Poly) -> Result<Factorization> {
    let unit = p
        .lc()
        .cloned()
        .ok_or_else(|| Error::domain("factor_poly: zero polynomial"))?;
    let mut factors = Vec::new();
    for (part, mult) in squarefree_decomposition(p) {
        let (_, ints) = part.primitive_integer_part();
        for g in zassenhaus(&ints) {
            factors.push((Poly::from_int(&g).monic(), mult));
        }
    }
    factors.sort();
    Ok(Factorization { unit, factors })
}

fn small_primes() -> impl Iterator<Item = u64> {
    (3u64..).step_by(2).filter(|&n| {
        (3..)
            .step_by(2)
            .take_while(|d| d * d <= n)
            .all(|d| n % d != 0)
    })
}

fn reduce_mod_p(f: &[BigInt], fp: &Fp) -> PolyP {
    let p = BigInt::from(fp.p);
    fp.trim(
        f.iter()
            .map(|c| c.mod_floor(&p).to_u64().unwrap())
            .collect(),
    )
}

fn int_mul(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

fn int_mod(a: &[BigInt], m: &BigInt) -> Vec<BigInt> {
    a.iter().map(|c| c.mod_floor(m)).collect()
}

fn to_int(a: &[u64]) -> Vec<BigInt> {
    a.iter().map(|&c| BigInt::from(c)).collect()
}

/// Lifts `F = g*h (mod p)` to `F = G*H (mod p^k)` with `G` monic and
/// `lc(H) = lc(F)`.
fn lift_pair(fp: &Fp, f: &[BigInt], g: &PolyP, h: &PolyP, k: u32) -> (Vec<BigInt>, Vec<BigInt>) {
    let p = BigInt::from(fp.p);
    let modulus = p.pow(k);
    let (one, s, t) = fp.xgcd(g, h);
    debug_assert_eq!(one, vec![1]);
    let mut big_g = to_int(g);
    let mut big_h = to_int(h);
    *big_h.last_mut().unwrap() = f.last().unwrap().mod_floor(&modulus);
    let mut pj = p.clone();
    for _ in 1..k {
        let gh = int_mul(&big_g, &big_h);
        let n = f.len().max(gh.len());
        let err: Vec<BigInt> = (0..n)
            .map(|i| {
                let a = f.get(i).cloned().unwrap_or_default();
                let b = gh.get(i).cloned().unwrap_or_default();
                let d = a - b;
                debug_assert!((&d % &pj).is_zero());
                d / &pj
            })
            .collect();
        let e = reduce_mod_p(&err, fp);
        let te = fp.poly_mul(&t, &e);
        let (q, dg) = fp.divrem(&te, g);
        let dh = fp.poly_add(&fp.poly_mul(&s, &e), &fp.poly_mul(&q, h));
        for (i, c) in dg.iter().enumerate() {
            big_g[i] += &pj * BigInt::from(*c);
        }
        for (i, c) in dh.iter().enumerate() {
            big_h[i] += &pj * BigInt::from(*c);
        }
        pj *= &p;
    }
    (int_mod(&big_g, &modulus), int_mod(&big_h, &modulus))
}

fn inverse_mod(a: &BigInt, m: &BigInt) -> BigInt {
    let e = a.extended_gcd(m);
    debug_assert!(e.gcd.is_one());
    e.x.mod_floor(m)
}

/// Monic lifts mod `p^k` of the modular factorization `f = lc * prod(gs)`.
fn multi_lift(fp: &Fp, f: &[BigInt], gs: &[PolyP], k: u32) -> Vec<Vec<BigInt>> {
    let modulus = BigInt::from(fp.p).pow(k);
    let lc_p = reduce_mod_p(&[f.last().unwrap().clone()], fp)[0];
    let mut target = f.to_vec();
    let mut out = Vec::with_capacity(gs.len());
    for i in 0..gs.len() - 1 {
        let h = gs[i + 1..]
            .iter()
            .fold(vec![lc_p], |acc, g| fp.poly_mul(&acc, g));
        let (big_g, big_h) = lift_pair(fp, &target, &gs[i], &h, k);
        out.push(big_g);
        target = big_h;
    }
    let inv = inverse_mod(target.last().unwrap(), &modulus);
    out.push(int_mod(
        &target.iter().map(|c| c * &inv).collect::<Vec<_>>(),
        &modulus,
    ));
    out
}

fn symmetric(a: &[BigInt], m: &BigInt) -> Vec<BigInt> {
    let half = m / 2;
    a.iter()
        .map(|c| {
            let r = c.mod_floor(m);
            if r > half {
                r - m
            } else {
                r
            }
        })
        .collect()
}

fn primitive(a: Vec<BigInt>) -> Vec<BigInt> {
    let mut content = a.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
    if a.last().is_some_and(Signed::is_negative) {
        content = -content;
    }
    a.into_iter().map(|c| c / &content).collect()
}

/// Exact quotient in `Z[t]` when `d` divides `f`.
fn int_exact_div(f: &[BigInt], d: &[BigInt]) -> Option<Vec<BigInt>> {
    let q = Poly::from_int(f).exact_div(&Poly::from_int(d))?;
    q.coeffs()
        .iter()
        .map(|c| c.is_integer().then(|| c.to_integer()))
        .collect()
}

/// Factor bound for divisors of `f` (Mignotte): `2^n * ||f||_2`.
fn factor_coefficient_bound(f: &[BigInt]) -> BigInt {
    let n = f.len() - 1;
    let norm2: BigInt = f.iter().map(|c| c * c).sum();
    (norm2.sqrt() + 1u32) << n
}

/// Irreducible factors over `Z` of a primitive squarefree integer
/// polynomial with positive leading coefficient.
fn zassenhaus(f: &[BigInt]) -> Vec<Vec<BigInt>> {
    let deg = f.len() - 1;
    if deg <= 1 {
        return vec![f.to_vec()];
    }
    let lc = f.last().unwrap().clone();
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let mut best: Option<(Fp, Vec<PolyP>)> = None;
    let mut tried = 0;
    for p in small_primes() {
        if (&lc % BigInt::from(p)).is_zero() {
            continue;
        }
        let fp = Fp::new(p);
        let fbar = reduce_mod_p(f, &fp);
        if fbar.len() != f.len() || !fp.is_squarefree(&fbar) {
            continue;
        }
        let gs = fp.factor_squarefree(&fp.monic(&fbar), &mut rng);
        if gs.len() == 1 {
            return vec![f.to_vec()];
        }
        if best.as_ref().is_none_or(|(_, b)| gs.len() < b.len()) {
            best = Some((fp, gs));
        }
        tried += 1;
        if tried >= 6 {
            break;
        }
    }
    let (fp, gs) = best.expect("a good prime always exists for a squarefree polynomial");

    let bound = factor_coefficient_bound(f) * &lc * 2u32;
    let p = BigInt::from(fp.p);
    let mut k = 1u32;
    let mut modulus = p.clone();
    while modulus <= bound {
        modulus *= &p;
        k += 1;
    }
    let mut lifted = multi_lift(&fp, f, &gs, k);

    let mut rest = f.to_vec();
    let mut found = Vec::new();
    let mut size = 1;
    while 2 * size <= lifted.len() {
        let mut hit = None;
        for combo in (0..lifted.len()).combinations(size) {
            if 2 * size == lifted.len() && combo[0] != 0 {
                break;
            }
            let lc_rest = rest.last().unwrap().clone();
            let c0 = combo.iter().fold(lc_rest.clone(), |acc, &i| {
                (acc * &lifted[i][0]).mod_floor(&modulus)
            });
            let c0 = symmetric(&[c0], &modulus).pop().unwrap();
            if !rest[0].is_zero() && (c0.is_zero() || !(&rest[0] * &lc_rest).is_multiple_of(&c0)) {
                continue;
            }
            let prod = combo.iter().fold(vec![lc_rest], |acc, &i| {
                int_mod(&int_mul(&acc, &lifted[i]), &modulus)
            });
            let cand = primitive(symmetric(&prod, &modulus));
            if let Some(q) = int_exact_div(&rest, &cand) {
                hit = Some((combo, cand, q));
                break;
            }
        }
        match hit {
            Some((combo, cand, q)) => {
                found.push(cand);
                rest = primitive(q);
                for &i in combo.iter().rev() {
                    lifted.remove(i);
                }
            }
            None => size += 1,
        }
    }
    if rest.len() > 1 {
        found.push(rest);
    }
    found
}
