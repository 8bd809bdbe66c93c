//! Small prime utilities (trial division scale).

use alloc::vec::Vec;

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

pub fn primes_up_to(n: u64) -> Vec<u64> {
    (2..=n).filter(|&p| is_prime(p)).collect()
}

/// Distinct prime divisors of `n`, ascending.
pub fn prime_divisors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// The largest power of `p` dividing `n`.
pub fn p_part(n: u64, p: u64) -> u64 {
    debug_assert!(is_prime(p));
    let mut out = 1;
    let mut n = n;
    while n % p == 0 {
        out *= p;
        n /= p;
    }
    out
}

pub fn is_power_of(n: u64, p: u64) -> bool {
    n > 0 && p_part(n, p) == n
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basics() {
        assert!(is_prime(2));
        assert!(is_prime(97));
        assert!(!is_prime(1));
        assert!(!is_prime(91));
        assert_eq!(primes_up_to(12), vec![2, 3, 5, 7, 11]);
        assert_eq!(prime_divisors(1152), vec![2, 3]);
        assert_eq!(p_part(1152, 2), 128);
        assert_eq!(p_part(1152, 3), 9);
        assert_eq!(p_part(1152, 5), 1);
        assert!(is_power_of(8, 2));
        assert!(!is_power_of(12, 2));
    }
}
