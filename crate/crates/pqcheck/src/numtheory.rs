//! Elementary number theory over `u64`: factorization by trial division,
//! Euler phi, Moebius, divisor lists, modular inverses and CRT.
//!
//! Everything here is exact integer arithmetic on small inputs (group
//! exponents and conductors, a few thousand at most), so trial division is
//! the right tool.

/// Greatest common divisor.
pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

pub fn lcm(a: u64, b: u64) -> u64 {
    if a == 0 || b == 0 {
        return 0;
    }
    a / gcd(a, b) * b
}

/// Prime factorization as sorted `(p, multiplicity)` pairs.
pub fn factor(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2u64;
    while p * p <= n {
        if n % p == 0 {
            let mut a = 0;
            while n % p == 0 {
                n /= p;
                a += 1;
            }
            out.push((p, a));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

/// Distinct prime divisors, sorted.
pub fn prime_divisors(n: u64) -> Vec<u64> {
    factor(n).into_iter().map(|(p, _)| p).collect()
}

pub fn is_prime(n: u64) -> bool {
    n > 1 && factor(n) == vec![(n, 1)]
}

/// Euler's totient.
pub fn phi(n: u64) -> u64 {
    let mut out = n;
    for (p, _) in factor(n) {
        out = out / p * (p - 1);
    }
    out
}

/// Moebius function: 0 if n has a squared factor, else (-1)^(#primes).
pub fn moebius(n: u64) -> i64 {
    let fac = factor(n);
    if fac.iter().any(|&(_, a)| a > 1) {
        return 0;
    }
    if fac.len() % 2 == 0 {
        1
    } else {
        -1
    }
}

/// All divisors of n, sorted ascending.
pub fn divisors(n: u64) -> Vec<u64> {
    let mut out = vec![1u64];
    for (p, a) in factor(n) {
        let prev = out.clone();
        let mut pk = 1;
        for _ in 0..a {
            pk *= p;
            out.extend(prev.iter().map(|d| d * pk));
        }
    }
    out.sort_unstable();
    out
}

/// Inverse of a modulo m, if gcd(a, m) = 1.
pub fn mod_inv(a: u64, m: u64) -> Option<u64> {
    // extended Euclid on (a mod m, m) tracking the first Bezout coefficient
    let (mut r0, mut r1) = ((a % m) as i128, m as i128);
    let (mut s0, mut s1) = (1i128, 0i128);
    while r1 != 0 {
        let q = r0 / r1;
        let r = r0 - q * r1;
        r0 = r1;
        r1 = r;
        let s = s0 - q * s1;
        s0 = s1;
        s1 = s;
    }
    if r0 != 1 {
        return None;
    }
    let m = m as i128;
    Some(((s0 % m + m) % m) as u64)
}

/// x with x = r1 (mod m1), x = r2 (mod m2); m1, m2 coprime. Result mod m1*m2.
pub fn crt2(r1: u64, m1: u64, r2: u64, m2: u64) -> u64 {
    let inv = mod_inv(m1 % m2, m2).expect("crt2: moduli must be coprime");
    // x = r1 + m1 * t, t = (r2 - r1) / m1 (mod m2)
    let t = ((r2 as i128 - r1 as i128).rem_euclid(m2 as i128) as u64 * inv as u64) % m2;
    r1 + m1 * (t as u64)
}

pub fn pow_mod(b: u64, mut e: u64, m: u64) -> u64 {
    let mut out = 1u128;
    let mm = m as u128;
    let mut bb = (b % m) as u128;
    while e > 0 {
        if e & 1 == 1 {
            out = out * bb % mm;
        }
        bb = bb * bb % mm;
        e >>= 1;
    }
    out as u64
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn factor_basics() {
        assert_eq!(factor(1), vec![]);
        assert_eq!(factor(360), vec![(2, 3), (3, 2), (5, 1)]);
        assert_eq!(factor(97), vec![(97, 1)]);
    }

    #[test]
    fn phi_moebius_divisors() {
        assert_eq!(phi(1), 1);
        assert_eq!(phi(12), 4);
        assert_eq!(phi(97), 96);
        assert_eq!(moebius(1), 1);
        assert_eq!(moebius(6), 1);
        assert_eq!(moebius(30), -1);
        assert_eq!(moebius(12), 0);
        assert_eq!(divisors(12), vec![1, 2, 3, 4, 6, 12]);
        // phi is multiplicative over the divisor sum: sum_{d|n} phi(d) = n
        for n in 1..200u64 {
            assert_eq!(divisors(n).into_iter().map(phi).sum::<u64>(), n);
        }
    }

    #[test]
    fn crt_and_inverse() {
        assert_eq!(mod_inv(3, 7), Some(5));
        assert_eq!(mod_inv(2, 4), None);
        let x = crt2(2, 3, 3, 5);
        assert_eq!(x % 3, 2);
        assert_eq!(x % 5, 3);
        assert!(x < 15);
        assert_eq!(pow_mod(2, 10, 1000), 24);
    }
}
