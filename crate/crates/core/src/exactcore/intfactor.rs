//! Integer factorization: trial division, Miller-Rabin and Pollard-Brent rho.

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

const TRIAL_LIMIT: u32 = 1 << 14;
const MR_BASES: [u32; 13] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41];

/// Miller-Rabin with the first thirteen prime bases. Deterministic below
/// 3.3 * 10^24.
pub fn is_probable_prime(n: &BigUint) -> bool {
    let two = BigUint::from(2u32);
    if *n < two {
        return false;
    }
    for &b in &MR_BASES {
        let b = BigUint::from(b);
        if *n == b {
            return true;
        }
        if (n % &b).is_zero() {
            return false;
        }
    }
    let n1 = n - 1u32;
    let s = n1.trailing_zeros().unwrap_or(0);
    let d = &n1 >> s;
    'witness: for &b in &MR_BASES {
        let mut x = BigUint::from(b).modpow(&d, n);
        if x.is_one() || x == n1 {
            continue;
        }
        for _ in 1..s {
            x = x.modpow(&two, n);
            if x == n1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn pollard_brent(n: &BigUint, seed: u64) -> Option<BigUint> {
    if n.is_even() {
        return Some(BigUint::from(2u32));
    }
    let c = BigUint::from(seed);
    let f = |x: &BigUint| (x * x + &c) % n;
    let mut y = BigUint::from(seed + 1) % n;
    let mut r: u64 = 1;
    let mut q = BigUint::one();
    let mut g = BigUint::one();
    let mut x = y.clone();
    let mut ys = y.clone();
    const M: u64 = 128;
    while g.is_one() {
        x = y.clone();
        for _ in 0..r {
            y = f(&y);
        }
        let mut k = 0;
        while k < r && g.is_one() {
            ys = y.clone();
            for _ in 0..M.min(r - k) {
                y = f(&y);
                let diff = if x > y { &x - &y } else { &y - &x };
                q = (q * diff) % n;
            }
            g = q.gcd(n);
            k += M;
        }
        r *= 2;
        if r > 1 << 24 {
            return None;
        }
    }
    if g == *n {
        loop {
            ys = f(&ys);
            let diff = if x > ys { &x - &ys } else { &ys - &x };
            g = diff.gcd(n);
            if !g.is_one() {
                break;
            }
        }
    }
    (g != *n).then_some(g)
}

fn split_into(n: BigUint, out: &mut Vec<BigUint>) {
    if n.is_one() {
        return;
    }
    if is_probable_prime(&n) {
        out.push(n);
        return;
    }
    for seed in 1u64.. {
        if let Some(d) = pollard_brent(&n, seed) {
            let other = &n / &d;
            split_into(d, out);
            split_into(other, out);
            return;
        }
    }
}

/// Prime factorization of a positive integer as `(prime, exponent)` pairs in
/// increasing order. `factor_integer(1)` is empty.
///
/// # Panics
/// If `n` is zero.
pub fn factor_integer(n: &BigUint) -> Vec<(BigUint, u32)> {
    assert!(!n.is_zero(), "factor_integer: zero has no factorization");
    let mut n = n.clone();
    let mut primes: Vec<BigUint> = Vec::new();
    let mut p = 2u32;
    while p < TRIAL_LIMIT {
        if n.is_one() {
            break;
        }
        if let Some(small) = n.to_u64() {
            if (p as u64) * (p as u64) > small {
                primes.push(n.clone());
                n = BigUint::one();
                break;
            }
        }
        let bp = BigUint::from(p);
        while (&n % &bp).is_zero() {
            n /= &bp;
            primes.push(bp.clone());
        }
        p += if p == 2 { 1 } else { 2 };
    }
    split_into(n, &mut primes);
    primes.sort();
    let mut out: Vec<(BigUint, u32)> = Vec::new();
    for q in primes {
        match out.last_mut() {
            Some((last, e)) if *last == q => *e += 1,
            _ => out.push((q, 1)),
        }
    }
    out
}
