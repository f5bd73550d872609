//! Small integer helpers: primality, factorisation, and π-parts.

/// Trial-division primality test.
pub fn is_prime(n: usize) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Distinct prime divisors of `n`, ascending.
pub fn prime_divisors(mut n: usize) -> Vec<usize> {
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

/// The largest divisor of `n` whose prime factors all lie in `primes`.
pub fn pi_part(mut n: usize, primes: &[usize]) -> usize {
    let mut part = 1;
    for &p in primes {
        if p < 2 {
            continue;
        }
        while n % p == 0 {
            n /= p;
            part *= p;
        }
    }
    part
}

/// The largest power of `p` dividing `n`.
pub fn p_part(n: usize, p: usize) -> usize {
    pi_part(n, &[p])
}

/// True if every prime factor of `n` lies in `primes` (1 is a π-number for every π).
pub fn is_pi_number(n: usize, primes: &[usize]) -> bool {
    n > 0 && pi_part(n, primes) == n
}

/// True if no prime factor of `n` lies in `primes`.
pub fn is_pi_prime_number(n: usize, primes: &[usize]) -> bool {
    n > 0 && pi_part(n, primes) == 1
}

/// True if `n` is a power of `p` (including `p^0 = 1`).
pub fn is_power_of(n: usize, p: usize) -> bool {
    is_pi_number(n, &[p])
}

pub fn gcd(mut a: usize, mut b: usize) -> usize {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// True if `n > 1` has no repeated prime factor.
pub fn is_square_free(n: usize) -> bool {
    n > 1 && prime_divisors(n).iter().product::<usize>() == n
}

/// All nonempty subsets of `primes`, each sorted, in a fixed order.
pub fn nonempty_subsets(primes: &[usize]) -> Vec<Vec<usize>> {
    (1u32..(1 << primes.len()))
        .map(|mask| {
            primes
                .iter()
                .enumerate()
                .filter(|(i, _)| mask & (1 << i) != 0)
                .map(|(_, &p)| p)
                .collect()
        })
        .collect()
}
