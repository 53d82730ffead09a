//! Modular arithmetic on `u128` and primality testing.

fn add_mod(a: u128, b: u128, m: u128) -> u128 {
    // a, b < m; avoid overflow for m close to u128::MAX
    if a >= m - b {
        a - (m - b)
    } else {
        a + b
    }
}

pub fn mul_mod(a: u128, b: u128, m: u128) -> u128 {
    let (mut a, mut b) = (a % m, b % m);
    if m <= u64::MAX as u128 {
        return a * b % m;
    }
    let mut acc = 0u128;
    while b > 0 {
        if b & 1 == 1 {
            acc = add_mod(acc, a, m);
        }
        a = add_mod(a, a, m);
        b >>= 1;
    }
    acc
}

pub fn pow_mod(mut base: u128, mut exp: u128, m: u128) -> u128 {
    if m == 1 {
        return 0;
    }
    let mut acc = 1u128;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

const SMALL_PRIMES: [u128; 25] = [
    2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97,
];

/// Miller–Rabin with the first 13 primes as witnesses is exact below
/// 3.3·10²⁴; above that all 25 primes below 100 are used and the answer is a
/// strong probable prime.
pub fn is_prime(n: u128) -> bool {
    if n < 2 {
        return false;
    }
    for &q in &SMALL_PRIMES {
        if n == q {
            return true;
        }
        if n % q == 0 {
            return false;
        }
    }
    let mut d = n - 1;
    let mut s = 0u32;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    let witnesses: &[u128] = if n < 3_317_044_064_679_887_385_961_981 {
        &SMALL_PRIMES[..13]
    } else {
        &SMALL_PRIMES
    };
    'outer: for &a in witnesses {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'outer;
            }
        }
        return false;
    }
    true
}

/// Smallest prime strictly greater than `n`, if it fits in a `u128`.
pub fn next_prime_above(n: u128) -> Option<u128> {
    let mut c = n.checked_add(1)?;
    if c <= 2 {
        return Some(2);
    }
    if c % 2 == 0 {
        c = c.checked_add(1)?;
    }
    loop {
        if is_prime(c) {
            return Some(c);
        }
        c = c.checked_add(2)?;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec::Vec;

    fn sieve(limit: usize) -> Vec<bool> {
        let mut is = alloc::vec![true; limit + 1];
        is[0] = false;
        is[1] = false;
        let mut i = 2;
        while i * i <= limit {
            if is[i] {
                let mut j = i * i;
                while j <= limit {
                    is[j] = false;
                    j += i;
                }
            }
            i += 1;
        }
        is
    }

    #[test]
    fn agrees_with_sieve() {
        let table = sieve(20_000);
        for (n, &p) in table.iter().enumerate() {
            assert_eq!(is_prime(n as u128), p, "n = {n}");
        }
    }

    #[test]
    fn known_values() {
        assert_eq!(next_prime_above(392), Some(397));
        assert!(is_prime(2_305_843_009_213_693_951)); // 2^61 - 1
        assert!(is_prime(170_141_183_460_469_231_731_687_303_715_884_105_727)); // 2^127 - 1
        assert!(!is_prime(3_215_031_751)); // strong pseudoprime to 2, 3, 5, 7
        assert!(!is_prime((1u128 << 64) + 1));
    }

    #[test]
    fn mul_mod_large_modulus() {
        let m = (1u128 << 127) - 1;
        let a = m - 1;
        // (-1)(-1) = 1
        assert_eq!(mul_mod(a, a, m), 1);
        assert_eq!(pow_mod(3, m - 1, m), 1);
    }
}
