//! Shared integer machinery: overflow-safe modular arithmetic on `u64`,
//! deterministic primality, divisor enumeration, and the Jacobi symbol.

/// (a * b) mod n without overflow.
pub fn mul_mod(a: u64, b: u64, n: u64) -> u64 {
    debug_assert!(n > 0);
    ((a as u128 * b as u128) % n as u128) as u64
}

/// (a + b) mod n without overflow.
pub fn add_mod(a: u64, b: u64, n: u64) -> u64 {
    debug_assert!(n > 0);
    ((a as u128 + b as u128) % n as u128) as u64
}

/// (a - b) mod n for canonical a, b in [0, n).
pub fn sub_mod(a: u64, b: u64, n: u64) -> u64 {
    debug_assert!(a < n && b < n);
    if a >= b {
        a - b
    } else {
        n - (b - a)
    }
}

/// a^e mod n by square-and-multiply.
pub fn pow_mod(mut a: u64, mut e: u64, n: u64) -> u64 {
    debug_assert!(n > 0);
    let mut acc = 1 % n;
    a %= n;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, a, n);
        }
        a = mul_mod(a, a, n);
        e >>= 1;
    }
    acc
}

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

/// Deterministic Miller-Rabin; the witness set covers all of `u64`.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n == p {
            return true;
        }
        if n % p == 0 {
            return false;
        }
    }
    let mut d = n - 1;
    let mut s = 0u32;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// All divisors of n, sorted ascending. Trial division up to sqrt(n).
pub fn divisors(n: u64) -> Vec<u64> {
    assert!(n >= 1);
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n % d == 0 {
            small.push(d);
            if d * d != n {
                large.push(n / d);
            }
        }
        d += 1;
    }
    large.reverse();
    small.extend(large);
    small
}

/// Smallest prime factor of n ≥ 2.
pub fn smallest_prime_factor(n: u64) -> u64 {
    assert!(n >= 2);
    if n % 2 == 0 {
        return 2;
    }
    let mut d = 3;
    while d * d <= n {
        if n % d == 0 {
            return d;
        }
        d += 2;
    }
    n
}

/// n = p^r for a prime p and r ≥ 1, if n is a prime power.
pub fn prime_power(n: u64) -> Option<(u64, u32)> {
    if n < 2 {
        return None;
    }
    let p = smallest_prime_factor(n);
    let mut m = n;
    let mut r = 0u32;
    while m % p == 0 {
        m /= p;
        r += 1;
    }
    (m == 1).then_some((p, r))
}

/// Jacobi symbol (a | n) for odd n ≥ 1.
pub fn jacobi(a: u64, n: u64) -> i8 {
    assert!(n % 2 == 1, "Jacobi symbol needs an odd denominator");
    let mut a = a % n;
    let mut n = n;
    let mut t = 1i8;
    while a != 0 {
        while a % 2 == 0 {
            a /= 2;
            // (2 | n) = -1 exactly when n ≡ 3, 5 (mod 8)
            if n % 8 == 3 || n % 8 == 5 {
                t = -t;
            }
        }
        std::mem::swap(&mut a, &mut n);
        // quadratic reciprocity
        if a % 4 == 3 && n % 4 == 3 {
            t = -t;
        }
        a %= n;
    }
    if n == 1 {
        t
    } else {
        0
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primality_small_and_structured() {
        let primes = [2u64, 3, 5, 7, 11, 199, 10007, 2147483647];
        for p in primes {
            assert!(is_prime(p), "{p} is prime");
        }
        let composites = [1u64, 4, 9, 15, 221, 1001, 25326001, 3215031751];
        for c in composites {
            assert!(!is_prime(c), "{c} is composite");
        }
        assert!(!is_prime(0));
    }

    #[test]
    fn divisors_sorted_and_complete() {
        assert_eq!(divisors(1), vec![1]);
        assert_eq!(divisors(45), vec![1, 3, 5, 9, 15, 45]);
        assert_eq!(divisors(64), vec![1, 2, 4, 8, 16, 32, 64]);
        for n in 1..200u64 {
            let ds = divisors(n);
            assert!(ds.windows(2).all(|w| w[0] < w[1]));
            assert!(ds.iter().all(|d| n % d == 0));
            let count = (1..=n).filter(|d| n % d == 0).count();
            assert_eq!(ds.len(), count);
        }
    }

    #[test]
    fn prime_power_detection() {
        assert_eq!(prime_power(8), Some((2, 3)));
        assert_eq!(prime_power(27), Some((3, 3)));
        assert_eq!(prime_power(7), Some((7, 1)));
        assert_eq!(prime_power(12), None);
        assert_eq!(prime_power(1), None);
    }

    #[test]
    fn jacobi_table() {
        // supplementary laws and classic values
        assert_eq!(jacobi(2, 3), -1);
        assert_eq!(jacobi(2, 5), -1);
        assert_eq!(jacobi(2, 7), 1);
        assert_eq!(jacobi(2, 17), 1);
        assert_eq!(jacobi(3, 3), 0);
        assert_eq!(jacobi(1001, 9907), -1);
        assert_eq!(jacobi(2, 45), -1);
        assert_eq!(jacobi(3, 45), 0);
        assert_eq!(jacobi(7, 45), -1);
        assert_eq!(jacobi(2, 15), 1);
        assert_eq!(jacobi(5, 21), 1);
        assert_eq!(jacobi(7, 15), -1);
        assert_eq!(jacobi(0, 1), 1);
    }

    #[test]
    fn jacobi_matches_legendre_on_primes() {
        // For odd prime p, (a | p) = a^((p-1)/2) mod p up to sign.
        for p in [3u64, 5, 7, 11, 13, 31, 199] {
            for a in 0..p {
                let euler = pow_mod(a, (p - 1) / 2, p);
                let expected = if euler == 0 {
                    0
                } else if euler == 1 {
                    1
                } else {
                    assert_eq!(euler, p - 1);
                    -1
                };
                assert_eq!(jacobi(a, p), expected, "a = {a}, p = {p}");
            }
        }
    }

    #[test]
    fn modmul_near_u64_boundary() {
        let n = u64::MAX - 58; // arbitrary large modulus
        let a = n - 1;
        assert_eq!(mul_mod(a, a, n), 1);
        assert_eq!(add_mod(a, a, n), n - 2);
        assert_eq!(sub_mod(0, a, n), 1);
        assert_eq!(pow_mod(a, 2, n), 1);
    }
}
