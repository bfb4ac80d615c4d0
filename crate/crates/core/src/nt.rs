//! Small integer helpers.

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3u64;
    while d.saturating_mul(d) <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// Distinct prime divisors of `n`, ascending.
pub fn prime_divisors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2u64;
    while d.saturating_mul(d) <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += if d == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Splits `q` as `p^t` with `p` prime, if possible.
pub fn prime_power(q: u64) -> Option<(u64, u32)> {
    let p = *prime_divisors(q).first()?;
    let mut t = 0;
    let mut rest = q;
    while rest.is_multiple_of(p) {
        rest /= p;
        t += 1;
    }
    (rest == 1).then_some((p, t))
}

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

pub fn lcm(a: u64, b: u64) -> u64 {
    a / gcd(a, b) * b
}

/// `C(n, r)`, saturating at `u64::MAX`.
pub fn binomial(n: u64, r: u64) -> u64 {
    if r > n {
        return 0;
    }
    let r = r.min(n - r);
    let mut acc: u128 = 1;
    for i in 0..r {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
        if acc > u64::MAX as u128 {
            return u64::MAX;
        }
    }
    acc as u64
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primes_and_powers() {
        assert!(is_prime(89) && is_prime(61) && !is_prime(91) && !is_prime(1));
        assert_eq!(prime_divisors(88), vec![2, 11]);
        assert_eq!(prime_divisors(60), vec![2, 3, 5]);
        assert_eq!(prime_power(49), Some((7, 2)));
        assert_eq!(prime_power(81), Some((3, 4)));
        assert_eq!(prime_power(45), None);
        assert_eq!(prime_power(1), None);
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(24, 12), 2_704_156);
        assert_eq!(binomial(14, 7), 3432);
        assert_eq!(binomial(3, 5), 0);
        assert_eq!(lcm(4, 6), 12);
    }
}
