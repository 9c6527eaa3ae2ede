use super::poly::Poly;

pub fn euler_totient(mut n: u64) -> u64 {
    let mut result = n;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            while n.is_multiple_of(p) {
                n /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if n > 1 {
        result -= result / n;
    }
    result
}

fn t_pow_minus_one(n: usize) -> Poly {
    let mut c = vec![0i64; n + 1];
    c[0] = -1;
    c[n] = 1;
    Poly::from_i64(&c)
}

/// The `n`-th cyclotomic polynomial, `(t^n - 1) / prod_{d | n, d < n} Phi_d`.
pub fn cyclotomic_poly(n: u64) -> Poly {
    assert!(n >= 1);
    let n = n as usize;
    let mut acc = t_pow_minus_one(n);
    for d in (1..n).filter(|d| n.is_multiple_of(*d)) {
        acc = acc.exact_div(&cyclotomic_poly(d as u64)).unwrap();
    }
    acc
}

/// `Some(n)` iff `p` is the `n`-th cyclotomic polynomial.
///
/// Candidates are the totient preimages of `deg p`; since
/// `phi(n) >= sqrt(n / 2)`, they all satisfy `n <= 2 deg(p)^2`.
pub fn is_cyclotomic(p: &Poly) -> Option<u64> {
    let d = p.degree().filter(|&d| d > 0 && p.is_monic())? as u64;
    (1..=(2 * d * d).max(6))
        .filter(|&n| euler_totient(n) == d)
        .find(|&n| cyclotomic_poly(n) == *p)
}
