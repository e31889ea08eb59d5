//! Prime sieving.  All congruence sweeps draw their primes from here;
//! nothing in the crate uses probabilistic primality tests.

/// Primes up to an inclusive bound, produced by the sieve of Eratosthenes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrimeList {
    bound: u64,
    primes: Vec<u64>,
}

impl PrimeList {
    pub fn bound(&self) -> u64 {
        self.bound
    }

    pub fn primes(&self) -> &[u64] {
        &self.primes
    }

    pub fn iter(&self) -> impl Iterator<Item = u64> + '_ {
        self.primes.iter().copied()
    }

    /// Membership test for values within the sieved bound.
    /// Panics if asked about a value beyond the bound.
    pub fn contains(&self, n: u64) -> bool {
        assert!(n <= self.bound, "{} exceeds the sieve bound {}", n, self.bound);
        self.primes.binary_search(&n).is_ok()
    }

    pub fn len(&self) -> usize {
        self.primes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.primes.is_empty()
    }
}

/// Sieve of Eratosthenes up to `bound` inclusive.
pub fn primes_up_to(bound: u64) -> PrimeList {
    if bound < 2 {
        return PrimeList { bound, primes: Vec::new() };
    }
    let n = bound as usize;
    let mut composite = vec![false; n + 1];
    let mut primes = Vec::new();
    for p in 2..=n {
        if !composite[p] {
            primes.push(p as u64);
            let mut m = p * p;
            while m <= n {
                composite[m] = true;
                m += p;
            }
        }
    }
    PrimeList { bound, primes }
}

/// Deterministic primality by trial division.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    if n % 3 == 0 {
        return n == 3;
    }
    let mut d = 5u64;
    while d * d <= n {
        if n % d == 0 || n % (d + 2) == 0 {
            return false;
        }
        d += 6;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sieve_up_to_thirty() {
        let list = primes_up_to(30);
        assert_eq!(
            list.primes(),
            &[2, 3, 5, 7, 11, 13, 17, 19, 23, 29]
        );
        assert_eq!(list.bound(), 30);
    }

    #[test]
    fn sieve_degenerate_bounds() {
        assert!(primes_up_to(0).is_empty());
        assert!(primes_up_to(1).is_empty());
        assert_eq!(primes_up_to(2).primes(), &[2]);
    }

    #[test]
    fn sieve_membership() {
        let list = primes_up_to(100);
        assert!(list.contains(97));
        assert!(!list.contains(91));
        assert_eq!(list.len(), 25);
    }

    #[test]
    fn trial_division_agrees_with_sieve() {
        let list = primes_up_to(500);
        for n in 0..=500u64 {
            assert_eq!(is_prime(n), n >= 2 && list.contains(n), "mismatch at {}", n);
        }
    }
}
