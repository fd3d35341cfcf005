//! Exact arithmetic in the ring of W-invariant characters: orbit-sum and
//! Weyl bases, Freudenthal multiplicities, Brauer multiplication, the
//! good-filtration test, Frobenius twist, duals, and exact division in the
//! full group ring.

use std::collections::{BTreeMap, HashMap, HashSet, VecDeque};

use serde::{Deserialize, Serialize};

use crate::affine::dot_dominant_rep;
use crate::error::Error;
use crate::rootdata::RootSystem;
use crate::weight::Weight;

/// An element of Z[X]^W in the orbit-sum basis s(mu), keyed by dominant
/// weights. Zero coefficients are never stored.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct OrbitCharacter {
    terms: BTreeMap<Weight, i64>,
}

/// An element of Z[X]^W in the Weyl basis chi(mu), keyed by dominant
/// weights. Zero coefficients are never stored.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct WeylCombo {
    terms: BTreeMap<Weight, i64>,
}

/// A general element of Z[X]: a finitely supported integer combination of
/// basis elements e(mu), mu not necessarily dominant.
#[derive(Debug, Clone, Default)]
pub struct FullCharacter {
    terms: HashMap<Weight, i64>,
}

impl OrbitCharacter {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn single(w: Weight, c: i64) -> Self {
        let mut out = Self::new();
        out.add_term(w, c);
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, w: &Weight) -> i64 {
        self.terms.get(w).copied().unwrap_or(0)
    }

    pub fn add_term(&mut self, w: Weight, c: i64) {
        if c == 0 {
            return;
        }
        debug_assert!(w.is_dominant(), "orbit keys must be dominant");
        let v = self.terms.entry(w.clone()).or_insert(0);
        *v += c;
        if *v == 0 {
            self.terms.remove(&w);
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Weight, &i64)> {
        self.terms.iter()
    }

    pub fn support(&self) -> impl Iterator<Item = &Weight> {
        self.terms.keys()
    }

    pub fn add_scaled(&mut self, other: &Self, k: i64) {
        for (w, c) in other.iter() {
            self.add_term(w.clone(), c * k);
        }
    }

    /// Frobenius twist: s(mu) -> s(p mu).
    pub fn frobenius_twist(&self, p: i64) -> OrbitCharacter {
        let mut out = OrbitCharacter::new();
        for (w, &c) in self.iter() {
            out.add_term(w.scaled(p), c);
        }
        out
    }

    /// Dual: s(mu) -> s(-w0 mu).
    pub fn dual(&self, rs: &RootSystem) -> OrbitCharacter {
        let mut out = OrbitCharacter::new();
        for (w, &c) in self.iter() {
            out.add_term(rs.dominant_representative(&w.negated()), c);
        }
        out
    }

    /// Expansion into Z[X].
    pub fn expand(&self, rs: &RootSystem) -> FullCharacter {
        let mut out = FullCharacter::new();
        for (mu, &c) in self.iter() {
            for sigma in rs.weyl_orbit(mu) {
                out.add_term(sigma, c);
            }
        }
        out
    }
}

impl WeylCombo {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn single(w: Weight, c: i64) -> Self {
        let mut out = Self::new();
        out.add_term(w, c);
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, w: &Weight) -> i64 {
        self.terms.get(w).copied().unwrap_or(0)
    }

    pub fn add_term(&mut self, w: Weight, c: i64) {
        if c == 0 {
            return;
        }
        debug_assert!(w.is_dominant(), "Weyl keys must be dominant");
        let v = self.terms.entry(w.clone()).or_insert(0);
        *v += c;
        if *v == 0 {
            self.terms.remove(&w);
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Weight, &i64)> {
        self.terms.iter()
    }

    pub fn support(&self) -> impl Iterator<Item = &Weight> {
        self.terms.keys()
    }

    pub fn add_scaled(&mut self, other: &Self, k: i64) {
        for (w, c) in other.iter() {
            self.add_term(w.clone(), c * k);
        }
    }

    /// Expansion into Z[X] (via the orbit basis).
    pub fn expand(&self, rs: &RootSystem) -> FullCharacter {
        weyl_to_orbit(rs, self).expand(rs)
    }
}

impl FullCharacter {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn single(w: Weight, c: i64) -> Self {
        let mut out = Self::new();
        out.add_term(w, c);
        out
    }

    pub fn one(rank: usize) -> Self {
        Self::single(Weight::zero(rank), 1)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, w: &Weight) -> i64 {
        self.terms.get(w).copied().unwrap_or(0)
    }

    pub fn add_term(&mut self, w: Weight, c: i64) {
        if c == 0 {
            return;
        }
        let v = self.terms.entry(w.clone()).or_insert(0);
        *v += c;
        if *v == 0 {
            self.terms.remove(&w);
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Weight, &i64)> {
        self.terms.iter()
    }

    /// Frobenius twist: e(mu) -> e(p mu).
    pub fn frobenius_twist(&self, p: i64) -> FullCharacter {
        let mut out = FullCharacter::new();
        for (w, &c) in self.iter() {
            out.add_term(w.scaled(p), c);
        }
        out
    }

    /// Dual: e(mu) -> e(-mu).
    pub fn dual(&self) -> FullCharacter {
        let mut out = FullCharacter::new();
        for (w, &c) in self.iter() {
            out.add_term(w.negated(), c);
        }
        out
    }

    pub fn multiply(&self, other: &FullCharacter) -> FullCharacter {
        let (small, big) = if self.len() <= other.len() {
            (self, other)
        } else {
            (other, self)
        };
        let mut out = FullCharacter::new();
        for (a, &ca) in small.iter() {
            for (b, &cb) in big.iter() {
                out.add_term(a.add(b), ca * cb);
            }
        }
        out
    }

    /// True iff invariant under every simple reflection (hence under W).
    pub fn is_w_invariant(&self, rs: &RootSystem) -> bool {
        for i in 0..rs.rank() {
            for (w, &c) in self.iter() {
                if self.coeff(&rs.simple_reflect(w, i)) != c {
                    return false;
                }
            }
        }
        true
    }

    /// Read off orbit-basis coefficients from the dominant part; only
    /// meaningful on W-invariant elements.
    pub fn to_orbit(&self) -> OrbitCharacter {
        let mut out = OrbitCharacter::new();
        for (w, &c) in self.iter() {
            if w.is_dominant() {
                out.add_term(w.clone(), c);
            }
        }
        out
    }

    /// Exact division in Z[X] by leading-term elimination under the
    /// (height, lex) group order. Returns `Error::NotDivisible` when no
    /// exact quotient exists.
    pub fn divide_exact(
        &self,
        rs: &RootSystem,
        divisor: &FullCharacter,
    ) -> Result<FullCharacter, Error> {
        if divisor.is_zero() {
            return Err(Error::ZeroCharacter);
        }
        if self.is_zero() {
            return Ok(FullCharacter::new());
        }
        let leading = |f: &FullCharacter| -> Option<(Weight, i64)> {
            f.iter()
                .max_by(|(a, _), (b, _)| rs.height_lex_cmp(a, b))
                .map(|(w, &c)| (w.clone(), c))
        };
        let trailing = |f: &FullCharacter| -> Weight {
            f.iter()
                .min_by(|(a, _), (b, _)| rs.height_lex_cmp(a, b))
                .map(|(w, _)| w.clone())
                .unwrap()
        };

        let (g_lead_w, g_lead_c) = leading(divisor).unwrap();
        // any quotient term sits at or above this weight in the group order
        let low = trailing(self).sub(&trailing(divisor));

        let mut rem = self.clone();
        let mut quot = FullCharacter::new();
        while let Some((rw, rc)) = leading(&rem) {
            let qw = rw.sub(&g_lead_w);
            if rc % g_lead_c != 0 || rs.height_lex_cmp(&qw, &low) == std::cmp::Ordering::Less {
                return Err(Error::NotDivisible);
            }
            let qc = rc / g_lead_c;
            quot.add_term(qw.clone(), qc);
            for (b, &cb) in divisor.iter() {
                rem.add_term(qw.add(b), -qc * cb);
            }
        }
        Ok(quot)
    }
}

/// All dominant weights mu <= lambda, found by closing downward under
/// subtraction of positive roots (dominance covers between dominant weights
/// differ by single positive roots).
pub fn dominant_below(rs: &RootSystem, lambda: &Weight) -> Vec<Weight> {
    debug_assert!(lambda.is_dominant());
    let mut seen: HashSet<Weight> = HashSet::new();
    seen.insert(lambda.clone());
    let mut queue = VecDeque::new();
    queue.push_back(lambda.clone());
    while let Some(mu) = queue.pop_front() {
        for root in rs.positive_roots() {
            let mut nu = mu.clone();
            for (r, f) in root.fw_coords.iter().enumerate() {
                nu.0[r] -= f;
            }
            if nu.is_dominant() && seen.insert(nu.clone()) {
                queue.push_back(nu);
            }
        }
    }
    let mut out: Vec<Weight> = seen.into_iter().collect();
    out.sort();
    out
}

/// The Weyl character chi(lambda) in the orbit basis, computed by
/// Freudenthal's recursion in exact integers.
pub fn freudenthal(rs: &RootSystem, lambda: &Weight) -> OrbitCharacter {
    assert!(lambda.is_dominant(), "freudenthal requires a dominant weight");
    let n = rs.rank();
    let sym = rs.symmetrizer();

    // W-invariant form (x, v) with v given by integer root coordinates.
    let form =
        |x_fw: &[i64], v_root: &[i64]| -> i64 { (0..n).map(|j| sym[j] * v_root[j] * x_fw[j]).sum() };

    let mut support = dominant_below(rs, lambda);
    support.sort_by_key(|mu| rs.scaled_height(&lambda.sub(mu)));

    let mut mult: HashMap<Weight, i64> = HashMap::new();
    mult.insert(lambda.clone(), 1);
    let rho = rs.rho();

    for mu in support.iter().skip(1) {
        let mut num: i64 = 0;
        for root in rs.positive_roots() {
            let mut k = 1i64;
            loop {
                let nu = Weight((0..n).map(|r| mu.0[r] + k * root.fw_coords[r]).collect());
                let rep = rs.dominant_representative(&nu);
                match mult.get(&rep) {
                    Some(&m) => num += m * form(&nu.0, &root.root_coords),
                    None => break,
                }
                k += 1;
            }
        }
        // |lambda+rho|^2 - |mu+rho|^2 = (lambda+mu+2rho, lambda-mu)
        let diff_rc = rs
            .root_coords(&lambda.sub(mu))
            .expect("support weights lie in lambda's coset");
        let big: Vec<i64> = (0..n).map(|r| lambda.0[r] + mu.0[r] + 2 * rho.0[r]).collect();
        let den = form(&big, &diff_rc);
        assert!(den > 0);
        assert_eq!((2 * num) % den, 0, "Freudenthal division must be exact");
        let m = 2 * num / den;
        assert!(m > 0);
        mult.insert(mu.clone(), m);
    }

    let mut out = OrbitCharacter::new();
    for (w, c) in mult {
        out.add_term(w, c);
    }
    out
}

/// Basis change from orbit sums to Weyl characters (triangular with unit
/// diagonal; inverse of `weyl_to_orbit`).
pub fn orbit_to_weyl(rs: &RootSystem, eta: &OrbitCharacter) -> WeylCombo {
    let mut rem = eta.clone();
    let mut out = WeylCombo::new();
    while !rem.is_zero() {
        let (mu, &c) = rem
            .iter()
            .max_by(|(a, _), (b, _)| rs.height_lex_cmp(a, b))
            .unwrap();
        let mu = mu.clone();
        out.add_term(mu.clone(), c);
        rem.add_scaled(&freudenthal(rs, &mu), -c);
    }
    out
}

/// Basis change from Weyl characters to orbit sums.
pub fn weyl_to_orbit(rs: &RootSystem, f: &WeylCombo) -> OrbitCharacter {
    let mut out = OrbitCharacter::new();
    for (mu, &c) in f.iter() {
        out.add_scaled(&freudenthal(rs, mu), c);
    }
    out
}

/// Brauer's formula: chi(lambda) s(mu) = sum over sigma in W mu of
/// chi(lambda + sigma), each straightened into the dominant chamber.
pub fn brauer_multiply(rs: &RootSystem, lambda: &Weight, mu: &Weight) -> WeylCombo {
    debug_assert!(lambda.is_dominant() && mu.is_dominant());
    let mut out = WeylCombo::new();
    for sigma in rs.weyl_orbit(mu) {
        if let Some((target, sign)) = dot_dominant_rep(rs, &lambda.add(&sigma)) {
            out.add_term(target, sign);
        }
    }
    out
}

/// Linear extension of Brauer's formula over the terms of an orbit
/// character: eta * chi(lambda) in the Weyl basis.
pub fn multiply_orbit_by_weyl(rs: &RootSystem, eta: &OrbitCharacter, lambda: &Weight) -> WeylCombo {
    let mut out = WeylCombo::new();
    for (mu, &c) in eta.iter() {
        out.add_scaled(&brauer_multiply(rs, lambda, mu), c);
    }
    out
}

/// A nonzero element whose Weyl-basis coefficients are all non-negative.
pub fn is_good_filtration(f: &WeylCombo) -> bool {
    !f.is_zero() && f.iter().all(|(_, &c)| c >= 0)
}

/// Product of two orbit characters, computed in Z[X] and read back into the
/// orbit basis.
pub fn multiply_orbit_characters(
    rs: &RootSystem,
    a: &OrbitCharacter,
    b: &OrbitCharacter,
) -> OrbitCharacter {
    a.expand(rs).multiply(&b.expand(rs)).to_orbit()
}

/// Serialized form of a character; the schema is shared by all three bases.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct CharacterJson {
    #[serde(rename = "type")]
    pub type_label: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub p: Option<i64>,
    pub basis: String,
    pub terms: Vec<TermJson>,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct TermJson {
    pub weight: Vec<i64>,
    pub coeff: i64,
}

fn terms_json(it: impl Iterator<Item = (Weight, i64)>) -> Vec<TermJson> {
    let mut terms: Vec<TermJson> = it
        .map(|(w, c)| TermJson {
            weight: w.0,
            coeff: c,
        })
        .collect();
    terms.sort_by(|a, b| a.weight.cmp(&b.weight));
    terms
}

impl CharacterJson {
    pub fn from_orbit(rs: &RootSystem, p: Option<i64>, eta: &OrbitCharacter) -> Self {
        CharacterJson {
            type_label: rs.label().to_string(),
            p,
            basis: "orbit".into(),
            terms: terms_json(eta.iter().map(|(w, &c)| (w.clone(), c))),
        }
    }

    pub fn from_weyl(rs: &RootSystem, p: Option<i64>, f: &WeylCombo) -> Self {
        CharacterJson {
            type_label: rs.label().to_string(),
            p,
            basis: "weyl".into(),
            terms: terms_json(f.iter().map(|(w, &c)| (w.clone(), c))),
        }
    }

    pub fn from_full(rs: &RootSystem, p: Option<i64>, f: &FullCharacter) -> Self {
        CharacterJson {
            type_label: rs.label().to_string(),
            p,
            basis: "full".into(),
            terms: terms_json(f.iter().map(|(w, &c)| (w.clone(), c))),
        }
    }

    pub fn to_orbit(&self) -> Result<OrbitCharacter, Error> {
        if self.basis != "orbit" {
            return Err(Error::CacheFormat(format!(
                "expected orbit basis, got {}",
                self.basis
            )));
        }
        let mut out = OrbitCharacter::new();
        for t in &self.terms {
            out.add_term(Weight(t.weight.clone()), t.coeff);
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootdata::build_root_system;

    fn rs(s: &str) -> RootSystem {
        build_root_system(s).unwrap()
    }

    fn w(v: &[i64]) -> Weight {
        Weight(v.to_vec())
    }

    fn orbit(terms: &[(&[i64], i64)]) -> OrbitCharacter {
        let mut out = OrbitCharacter::new();
        for (wt, c) in terms {
            out.add_term(w(wt), *c);
        }
        out
    }

    #[test]
    fn freudenthal_examples() {
        let a1 = rs("A1");
        assert_eq!(
            freudenthal(&a1, &w(&[0])),
            OrbitCharacter::single(w(&[0]), 1)
        );
        assert_eq!(
            freudenthal(&a1, &w(&[4])),
            orbit(&[(&[4], 1), (&[2], 1), (&[0], 1)])
        );
        let a2 = rs("A2");
        assert_eq!(
            freudenthal(&a2, &w(&[1, 1])),
            orbit(&[(&[1, 1], 1), (&[0, 0], 2)])
        );
    }

    #[test]
    fn freudenthal_dimensions() {
        // dim chi(lambda) = sum of orbit sizes times multiplicities;
        // cross-checked against the Weyl dimension formula values.
        let a3 = rs("A3");
        let cases = [(w(&[1, 0, 0]), 4i64), (w(&[0, 1, 0]), 6), (w(&[1, 0, 1]), 15), (w(&[1, 1, 1]), 64)];
        for (lambda, dim) in cases {
            let ch = freudenthal(&a3, &lambda);
            let total: i64 = ch
                .iter()
                .map(|(mu, &c)| c * a3.weyl_orbit(mu).len() as i64)
                .sum();
            assert_eq!(total, dim, "dim chi({lambda})");
        }
    }

    #[test]
    fn orbit_weyl_round_trip_examples() {
        let a1 = rs("A1");
        let eta = OrbitCharacter::single(w(&[0]), 1);
        let f = orbit_to_weyl(&a1, &eta);
        assert_eq!(f, WeylCombo::single(w(&[0]), 1));
        // s(2) = chi(2) - chi(0)
        let f = orbit_to_weyl(&a1, &OrbitCharacter::single(w(&[2]), 1));
        let mut expect = WeylCombo::new();
        expect.add_term(w(&[2]), 1);
        expect.add_term(w(&[0]), -1);
        assert_eq!(f, expect);
        // round trip
        let eta = orbit(&[(&[4], 2), (&[2], -1), (&[0], 5)]);
        assert_eq!(weyl_to_orbit(&a1, &orbit_to_weyl(&a1, &eta)), eta);
    }

    #[test]
    fn brauer_examples() {
        let a1 = rs("A1");
        // chi(lambda) s(0) = chi(lambda)
        assert_eq!(
            brauer_multiply(&a1, &w(&[3]), &w(&[0])),
            WeylCombo::single(w(&[3]), 1)
        );
        // chi(1) s(1) = chi(2) + chi(0)
        let f = brauer_multiply(&a1, &w(&[1]), &w(&[1]));
        let mut expect = WeylCombo::new();
        expect.add_term(w(&[2]), 1);
        expect.add_term(w(&[0]), 1);
        assert_eq!(f, expect);
        // chi(0) s(2) = chi(2) - chi(0)
        let f = brauer_multiply(&a1, &w(&[0]), &w(&[2]));
        let mut expect = WeylCombo::new();
        expect.add_term(w(&[2]), 1);
        expect.add_term(w(&[0]), -1);
        assert_eq!(f, expect);
    }

    #[test]
    fn multiply_orbit_by_weyl_linearity() {
        let a2 = rs("A2");
        // eta = s(0): product is chi(lambda)
        let f = multiply_orbit_by_weyl(&a2, &OrbitCharacter::single(w(&[0, 0]), 1), &w(&[2, 1]));
        assert_eq!(f, WeylCombo::single(w(&[2, 1]), 1));
    }

    #[test]
    fn brauer_matches_full_ring_multiplication() {
        // chi(lambda) * s(mu) computed two ways: Brauer vs expansion in Z[X].
        let a2 = rs("A2");
        let cases = [
            (w(&[1, 0]), w(&[1, 1])),
            (w(&[1, 1]), w(&[2, 0])),
            (w(&[2, 1]), w(&[1, 1])),
            (w(&[0, 0]), w(&[2, 2])),
        ];
        for (lambda, mu) in cases {
            let brauer = brauer_multiply(&a2, &lambda, &mu);
            let full = freudenthal(&a2, &lambda)
                .expand(&a2)
                .multiply(&OrbitCharacter::single(mu.clone(), 1).expand(&a2));
            assert!(full.is_w_invariant(&a2));
            let via_full = orbit_to_weyl(&a2, &full.to_orbit());
            assert_eq!(brauer, via_full, "lambda={lambda} mu={mu}");
        }
    }

    #[test]
    fn good_filtration_examples() {
        assert!(is_good_filtration(&WeylCombo::single(w(&[3]), 1)));
        let mut f = WeylCombo::new();
        f.add_term(w(&[2]), 1);
        f.add_term(w(&[0]), -1);
        assert!(!is_good_filtration(&f));
        assert!(!is_good_filtration(&WeylCombo::new()));
    }

    #[test]
    fn twist_and_dual_examples() {
        let a2 = rs("A2");
        let s0 = OrbitCharacter::single(w(&[0, 0]), 1);
        assert_eq!(s0.frobenius_twist(5), s0);
        assert_eq!(
            OrbitCharacter::single(w(&[1, 0]), 1).dual(&a2),
            OrbitCharacter::single(w(&[0, 1]), 1)
        );
        let eta = orbit(&[(&[1, 0], 2), (&[1, 1], 1)]);
        assert_eq!(
            eta.frobenius_twist(2).frobenius_twist(3),
            eta.frobenius_twist(6)
        );
    }

    #[test]
    fn divide_exact_round_trips() {
        let a1 = rs("A1");
        let g = freudenthal(&a1, &w(&[2])).expand(&a1);
        assert_eq!(
            g.divide_exact(&a1, &g).unwrap().coeff(&w(&[0])),
            1
        );
        // chi(2)*chi(2) / chi(2) = chi(2), p=3 round trip
        let prod = g.multiply(&g);
        let q = prod.divide_exact(&a1, &g).unwrap();
        assert_eq!(q.to_orbit(), freudenthal(&a1, &w(&[2])));
        // chi(lambda)*chi((p-1)rho) / chi((p-1)rho) = chi(lambda)
        let a2 = rs("A2");
        let st = freudenthal(&a2, &w(&[4, 4])).expand(&a2);
        let f = freudenthal(&a2, &w(&[2, 1])).expand(&a2);
        let q = st.multiply(&f).divide_exact(&a2, &st).unwrap();
        assert_eq!(q.to_orbit(), freudenthal(&a2, &w(&[2, 1])));
    }

    #[test]
    fn divide_exact_detects_failure() {
        let a1 = rs("A1");
        let f = FullCharacter::single(w(&[1]), 1);
        let mut g = FullCharacter::new();
        g.add_term(w(&[0]), 1);
        g.add_term(w(&[-2]), 1);
        assert!(matches!(
            f.divide_exact(&a1, &g),
            Err(Error::NotDivisible)
        ));
        let mut h = FullCharacter::new();
        h.add_term(w(&[2]), 2);
        h.add_term(w(&[0]), 1);
        assert!(matches!(
            h.divide_exact(&a1, &FullCharacter::single(w(&[2]), 2)),
            Err(Error::NotDivisible)
        ));
    }

    #[test]
    fn character_json_round_trip() {
        let a3 = rs("A3");
        let eta = freudenthal(&a3, &w(&[1, 1, 1]));
        let json = CharacterJson::from_orbit(&a3, Some(5), &eta);
        let s = serde_json::to_string(&json).unwrap();
        let back: CharacterJson = serde_json::from_str(&s).unwrap();
        assert_eq!(back, json);
        assert_eq!(back.to_orbit().unwrap(), eta);
    }
}
