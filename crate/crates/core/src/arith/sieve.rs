/// All primes strictly below a cutoff, with each prime's residue mod 4.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrimeList {
    cutoff: u64,
    primes: Vec<u64>,
    residues: Vec<u8>,
}

impl PrimeList {
    pub fn cutoff(&self) -> u64 {
        self.cutoff
    }

    pub fn primes(&self) -> &[u64] {
        &self.primes
    }

    /// Residue of each prime mod 4, index-aligned with [`PrimeList::primes`].
    pub fn residues(&self) -> &[u8] {
        &self.residues
    }

    /// π(cutoff).
    pub fn len(&self) -> usize {
        self.primes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.primes.is_empty()
    }

    /// π(y) for `y <= cutoff`.
    pub fn pi(&self, y: u64) -> u64 {
        debug_assert!(y <= self.cutoff);
        self.primes.partition_point(|&p| p < y) as u64
    }

    /// Primes ≡ 1 (mod 4), in increasing order.
    pub fn one_mod_four(&self) -> Vec<u64> {
        self.primes
            .iter()
            .zip(&self.residues)
            .filter(|(_, &r)| r == 1)
            .map(|(&p, _)| p)
            .collect()
    }

    /// π(y; 1, 4) for `y <= cutoff`.
    pub fn pi_one_mod_four(&self, y: u64) -> u64 {
        let end = self.pi(y) as usize;
        self.residues[..end].iter().filter(|&&r| r == 1).count() as u64
    }
}

/// Sieve of Eratosthenes over the odd numbers below `x`.
pub fn sieve_primes(x: u64) -> PrimeList {
    let mut primes = Vec::new();
    if x > 2 {
        primes.push(2);
    }
    if x > 3 {
        // slot i stands for 2i + 1
        let slots = (x / 2) as usize;
        let mut composite = vec![false; slots];
        let mut i = 1usize;
        while (2 * i + 1) * (2 * i + 1) < x as usize {
            if !composite[i] {
                let p = 2 * i + 1;
                let mut j = (p * p) / 2;
                while j < slots {
                    composite[j] = true;
                    j += p;
                }
            }
            i += 1;
        }
        primes.extend(
            (1..slots)
                .filter(|&i| !composite[i])
                .map(|i| 2 * i as u64 + 1)
                .filter(|&p| p < x),
        );
    }
    let residues = primes.iter().map(|&p| (p % 4) as u8).collect();
    PrimeList {
        cutoff: x,
        primes,
        residues,
    }
}
