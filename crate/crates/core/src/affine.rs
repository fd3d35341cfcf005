//! Affine Weyl group combinatorics on weights: the dot action, affine
//! reflections s_{alpha,np}, p-regularity, straightening, and enumeration of
//! the down-set of the up-arrow ordering.

use std::collections::HashSet;
use std::sync::Arc;

use crate::error::Error;
use crate::rootdata::RootSystem;
use crate::weight::Weight;

/// A root system together with the parameter p of the affine reflection
/// arrangement. Immutable; safe to share across threads.
#[derive(Debug, Clone)]
pub struct AffineContext {
    rs: Arc<RootSystem>,
    p: i64,
}

fn is_prime(p: i64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

impl AffineContext {
    pub fn new(rs: Arc<RootSystem>, p: i64) -> Result<Self, Error> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(AffineContext { rs, p })
    }

    pub fn root_system(&self) -> &RootSystem {
        &self.rs
    }

    pub fn shared_root_system(&self) -> Arc<RootSystem> {
        Arc::clone(&self.rs)
    }

    pub fn p(&self) -> i64 {
        self.p
    }

    /// Require p > h (for operations that invoke the character formula).
    pub fn check_coxeter_bound(&self) -> Result<(), Error> {
        let h = self.rs.coxeter_number();
        if self.p <= h {
            return Err(Error::CoxeterBound { p: self.p, h });
        }
        Ok(())
    }

    /// The dot-action affine reflection about H_{alpha,np}:
    /// `nu - (<nu+rho, alpha_v> - np) alpha`, with `alpha` the positive root
    /// at `root_index`.
    pub fn dot_reflect(&self, nu: &Weight, root_index: usize, n: i64) -> Weight {
        let root = &self.rs.positive_roots()[root_index];
        let c = self.rs.pairing(nu, &root.coroot_coords) + self.rs.pairing(self.rs.rho(), &root.coroot_coords);
        let t = c - n * self.p;
        let mut out = nu.clone();
        for (r, f) in root.fw_coords.iter().enumerate() {
            out.0[r] -= t * f;
        }
        out
    }

    /// True iff no pairing of nu+rho with a positive coroot is divisible
    /// by p.
    pub fn is_p_regular(&self, nu: &Weight) -> bool {
        let shifted = nu.add(self.rs.rho());
        self.rs
            .positive_roots()
            .iter()
            .all(|root| self.rs.pairing(&shifted, &root.coroot_coords) % self.p != 0)
    }

    /// The down-set of the up-arrow ordering, intersected with the dominant
    /// cone: all dominant mu with (mu - rho) below (lambda - rho) along
    /// chains of affine reflections that strictly decrease the standard
    /// order. `lambda` must be dominant. The result is sorted and always
    /// contains `lambda`.
    pub fn up_down_set(&self, lambda: &Weight) -> Result<Vec<Weight>, Error> {
        self.rs.check_weight(lambda)?;
        if !lambda.is_dominant() {
            return Err(Error::NotDominant(lambda.clone()));
        }
        let rs = &*self.rs;
        let n = rs.rank();
        let p = self.p;

        // Search region: nodes nu with nu <= lambda - rho and
        // nu + rho >= lambda_min (minimal dominant coset representative).
        // Every decreasing chain ending at a dominant-shifted weight stays
        // inside; tracked by the integer vector g = root coords of
        // (nu + rho - lambda_min), which each reflection step decreases by
        // t * root_coords(alpha).
        let lambda_min = rs.minimal_coset_rep(lambda);
        let start = lambda.sub(rs.rho());
        let g0 = rs
            .root_coords(&lambda.sub(&lambda_min))
            .expect("lambda - lambda_min lies in the root lattice");

        let roots: Vec<(Vec<i64>, Vec<i64>, Vec<i64>)> = rs
            .positive_roots()
            .iter()
            .map(|r| (r.coroot_coords.clone(), r.fw_coords.clone(), r.root_coords.clone()))
            .collect();

        let pack = |v: &[i64]| -> u128 {
            let mut key: u128 = 0;
            for &c in v {
                debug_assert!((-32768..32768).contains(&c));
                key = (key << 16) | ((c + 32768) as u128 & 0xffff);
            }
            key
        };

        let mut visited: HashSet<u128> = HashSet::new();
        visited.insert(pack(&start.0));
        let mut work: Vec<(Vec<i64>, Vec<i64>)> = vec![(start.0.clone(), g0)];
        let mut members: Vec<Weight> = Vec::new();

        while let Some((nu, g)) = work.pop() {
            if nu.iter().all(|&c| c >= -1) {
                let mu = Weight(nu.iter().map(|&c| c + 1).collect());
                members.push(mu);
            }
            for (coroot, fw, rc) in &roots {
                // pairing of nu + rho with the coroot
                let c: i64 = (0..n).map(|j| coroot[j] * (nu[j] + 1)).sum();
                // largest step keeping g >= 0
                let mut k = i64::MAX;
                for j in 0..n {
                    if rc[j] > 0 {
                        k = k.min(g[j] / rc[j]);
                    }
                }
                // steps t = c - np > 0 congruent to c mod p
                let mut t = c.rem_euclid(p);
                if t == 0 {
                    t = p;
                }
                while t <= k {
                    let mut nu2 = nu.clone();
                    for j in 0..n {
                        nu2[j] -= t * fw[j];
                    }
                    if visited.insert(pack(&nu2)) {
                        let g2: Vec<i64> = (0..n).map(|j| g[j] - t * rc[j]).collect();
                        work.push((nu2, g2));
                    }
                    t += p;
                }
            }
        }
        members.sort();
        Ok(members)
    }
}

/// Straightening primitive for the dot action: if `<nu+rho, alpha_v> = 0`
/// for some positive coroot, returns None (the character vanishes);
/// otherwise the unique dominant mu with mu+rho in W(nu+rho) together with
/// the determinant sign of the straightening element.
pub fn dot_dominant_rep(rs: &RootSystem, nu: &Weight) -> Option<(Weight, i64)> {
    let mut x = nu.add(rs.rho());
    let mut sign = 1i64;
    loop {
        match x.0.iter().position(|&c| c < 0) {
            Some(i) => {
                rs.simple_reflect_in_place(&mut x, i);
                sign = -sign;
            }
            None => break,
        }
    }
    if x.0.iter().any(|&c| c == 0) {
        return None;
    }
    Some((x.sub(rs.rho()), sign))
}
