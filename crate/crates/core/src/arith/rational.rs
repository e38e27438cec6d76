use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Exact rational number; always kept in lowest terms with a positive denominator.
pub type Rational = BigRational;

pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Parses `"7"`, `"-3/2"` or `"inf"`-free rational text.
pub fn parse_rational(s: &str) -> Option<Rational> {
    let s = s.trim();
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().ok()?;
            let d: BigInt = d.trim().parse().ok()?;
            if d.is_zero() {
                None
            } else {
                Some(Rational::new(n, d))
            }
        }
        None => s.parse::<BigInt>().ok().map(Rational::from_integer),
    }
}

pub fn pow(q: &Rational, e: u32) -> Rational {
    let mut acc = Rational::one();
    for _ in 0..e {
        acc *= q;
    }
    acc
}

/// Smallest integer `>= q`.
pub fn ceil_to_u64(q: &Rational) -> u64 {
    let c = q.ceil();
    let n = c.to_integer();
    if n.is_negative() {
        0
    } else {
        u64::try_from(n).unwrap_or(u64::MAX)
    }
}

pub fn gcd_u64(a: u64, b: u64) -> u64 {
    a.gcd(&b)
}

/// `(u, v)` with `u*r - v*p = 1`, `0 <= u`, `0 <= v`, for coprime positive `p`, `r`.
pub fn bezout_pair(p: u64, r: u64) -> (u64, u64) {
    if r == 1 {
        return (1, 0);
    }
    // u = r^{-1} mod p
    let (p_i, r_i) = (p as i128, r as i128);
    let (mut old_r, mut rr) = (r_i, p_i);
    let (mut old_s, mut s) = (1i128, 0i128);
    while rr != 0 {
        let q = old_r / rr;
        (old_r, rr) = (rr, old_r - q * rr);
        (old_s, s) = (s, old_s - q * s);
    }
    let mut u = old_s % p_i;
    if u < 0 {
        u += p_i;
    }
    if u == 0 {
        u = p_i;
    }
    let v = (u * r_i - 1) / p_i;
    (u as u64, v as u64)
}
