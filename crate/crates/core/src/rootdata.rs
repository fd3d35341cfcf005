//! Root systems for the simple types, built from Cartan matrices.
//!
//! Weights are stored in fundamental-weight coordinates, so the simple roots
//! are the columns of the Cartan matrix and pairings with simple coroots are
//! coordinate reads. Roots carry their simple-root coordinates and their
//! coroot's simple-coroot coordinates in parallel. The inverse Cartan matrix
//! is kept exactly as the integer adjugate together with the determinant.

use std::collections::{HashSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use crate::error::Error;
use crate::weight::Weight;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CartanFamily {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl fmt::Display for CartanFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = match self {
            CartanFamily::A => 'A',
            CartanFamily::B => 'B',
            CartanFamily::C => 'C',
            CartanFamily::D => 'D',
            CartanFamily::E => 'E',
            CartanFamily::F => 'F',
            CartanFamily::G => 'G',
        };
        write!(f, "{c}")
    }
}

/// A Cartan type such as `A3` or `E6`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct TypeLabel {
    pub family: CartanFamily,
    pub rank: usize,
}

impl fmt::Display for TypeLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family, self.rank)
    }
}

impl FromStr for TypeLabel {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let s = s.trim();
        let mut chars = s.chars();
        let family = match chars.next().map(|c| c.to_ascii_uppercase()) {
            Some('A') => CartanFamily::A,
            Some('B') => CartanFamily::B,
            Some('C') => CartanFamily::C,
            Some('D') => CartanFamily::D,
            Some('E') => CartanFamily::E,
            Some('F') => CartanFamily::F,
            Some('G') => CartanFamily::G,
            _ => return Err(Error::UnsupportedType(s.to_string())),
        };
        let rank: usize = chars
            .as_str()
            .parse()
            .map_err(|_| Error::UnsupportedType(s.to_string()))?;
        Ok(TypeLabel { family, rank })
    }
}

/// A positive root together with its coroot, in three coordinate systems.
#[derive(Debug, Clone)]
pub struct PositiveRoot {
    /// Coefficients on the simple roots.
    pub root_coords: Vec<i64>,
    /// Coefficients of the coroot on the simple coroots.
    pub coroot_coords: Vec<i64>,
    /// Fundamental-weight coordinates (the Cartan matrix applied to
    /// `root_coords`).
    pub fw_coords: Vec<i64>,
}

impl PositiveRoot {
    pub fn height(&self) -> i64 {
        self.root_coords.iter().sum()
    }
}

/// Root-system data for one simple type, immutable after construction.
#[derive(Debug, Clone)]
pub struct RootSystem {
    label: TypeLabel,
    cartan: Vec<Vec<i64>>,
    /// Adjugate of the Cartan matrix: `cartan * adjugate = det * I`.
    adjugate: Vec<Vec<i64>>,
    det: i64,
    /// Symmetrizer d_i with d_i * cartan[i][j] = d_j * cartan[j][i];
    /// proportional to half the squared length of the i-th simple root.
    symmetrizer: Vec<i64>,
    positive_roots: Vec<PositiveRoot>,
    rho: Weight,
    /// Index into `positive_roots` of the highest short root; its coroot is
    /// the highest coroot.
    alpha0_index: usize,
    coxeter_number: i64,
}

fn cartan_matrix(label: TypeLabel) -> Result<(Vec<Vec<i64>>, Vec<i64>), Error> {
    use CartanFamily::*;
    let n = label.rank;
    let bad = || Err(Error::UnsupportedType(label.to_string()));
    let mut m = vec![vec![0i64; n]; n];
    for (i, row) in m.iter_mut().enumerate() {
        row[i] = 2;
    }
    let chain = |m: &mut Vec<Vec<i64>>, edges: &[(usize, usize)]| {
        for &(i, j) in edges {
            m[i][j] = -1;
            m[j][i] = -1;
        }
    };
    let sym = match (label.family, n) {
        (A, _) if n >= 1 => {
            chain(&mut m, &(0..n.saturating_sub(1)).map(|i| (i, i + 1)).collect::<Vec<_>>());
            vec![1; n]
        }
        (B, _) if n >= 2 => {
            chain(&mut m, &(0..n - 1).map(|i| (i, i + 1)).collect::<Vec<_>>());
            // alpha_{n-1} is short
            m[n - 1][n - 2] = -2;
            let mut d = vec![2; n];
            d[n - 1] = 1;
            d
        }
        (C, _) if n >= 2 => {
            chain(&mut m, &(0..n - 1).map(|i| (i, i + 1)).collect::<Vec<_>>());
            // alpha_{n-1} is long
            m[n - 2][n - 1] = -2;
            let mut d = vec![1; n];
            d[n - 1] = 2;
            d
        }
        (D, _) if n >= 3 => {
            chain(&mut m, &(0..n - 2).map(|i| (i, i + 1)).collect::<Vec<_>>());
            chain(&mut m, &[(n - 3, n - 1)]);
            vec![1; n]
        }
        (E, 6) | (E, 7) | (E, 8) => {
            let mut edges = vec![(0, 2), (1, 3), (2, 3), (3, 4), (4, 5)];
            if n >= 7 {
                edges.push((5, 6));
            }
            if n == 8 {
                edges.push((6, 7));
            }
            chain(&mut m, &edges);
            vec![1; n]
        }
        (F, 4) => {
            chain(&mut m, &[(0, 1), (2, 3)]);
            m[1][2] = -1;
            m[2][1] = -2;
            vec![2, 2, 1, 1]
        }
        (G, 2) => {
            m[0][1] = -3;
            m[1][0] = -1;
            vec![1, 3]
        }
        _ => return bad(),
    };
    Ok((m, sym))
}

/// Determinant and adjugate of an integer matrix via Faddeev-LeVerrier;
/// exact in integer arithmetic.
fn det_and_adjugate(a: &[Vec<i64>]) -> (i64, Vec<Vec<i64>>) {
    let n = a.len();
    let a128: Vec<Vec<i128>> = a
        .iter()
        .map(|r| r.iter().map(|&x| x as i128).collect())
        .collect();
    let mut m: Vec<Vec<i128>> = (0..n)
        .map(|i| (0..n).map(|j| i128::from(i == j)).collect())
        .collect();
    let mut c: i128 = 0;
    for k in 1..=n as i128 {
        if k > 1 {
            // M <- A*M + c*I
            let mut next = vec![vec![0i128; n]; n];
            for (i, row) in next.iter_mut().enumerate() {
                for (j, cell) in row.iter_mut().enumerate() {
                    let mut s = 0i128;
                    for l in 0..n {
                        s += a128[i][l] * m[l][j];
                    }
                    if i == j {
                        s += c;
                    }
                    *cell = s;
                }
            }
            m = next;
        }
        let mut tr = 0i128;
        for (i, row) in a128.iter().enumerate() {
            for (l, cell) in row.iter().enumerate() {
                tr += cell * m[l][i];
            }
        }
        debug_assert_eq!(tr % k, 0);
        c = -tr / k;
    }
    let det = if n % 2 == 0 { c } else { -c };
    let sign: i128 = if n % 2 == 1 { 1 } else { -1 };
    let adj: Vec<Vec<i64>> = m
        .iter()
        .map(|r| r.iter().map(|&x| i64::try_from(sign * x).unwrap()).collect())
        .collect();
    (i64::try_from(det).unwrap(), adj)
}

impl RootSystem {
    pub fn new(label: TypeLabel) -> Result<Self, Error> {
        let (cartan, symmetrizer) = cartan_matrix(label)?;
        let n = label.rank;
        let (det, adjugate) = det_and_adjugate(&cartan);
        assert!(det > 0, "Cartan determinant must be positive");

        // Close the simple roots under all simple reflections, tracking the
        // coroot coordinates in parallel.
        let mut seen: HashSet<Vec<i64>> = HashSet::new();
        let mut queue: VecDeque<(Vec<i64>, Vec<i64>)> = VecDeque::new();
        for i in 0..n {
            let mut c = vec![0i64; n];
            c[i] = 1;
            seen.insert(c.clone());
            queue.push_back((c.clone(), c));
        }
        let mut all: Vec<(Vec<i64>, Vec<i64>)> = queue.iter().cloned().collect();
        while let Some((c, d)) = queue.pop_front() {
            for i in 0..n {
                let pair_root: i64 = (0..n).map(|j| cartan[i][j] * c[j]).sum();
                let pair_coroot: i64 = (0..n).map(|j| cartan[j][i] * d[j]).sum();
                let mut c2 = c.clone();
                c2[i] -= pair_root;
                let mut d2 = d.clone();
                d2[i] -= pair_coroot;
                if seen.insert(c2.clone()) {
                    all.push((c2.clone(), d2.clone()));
                    queue.push_back((c2, d2));
                }
            }
        }
        let mut positive_roots: Vec<PositiveRoot> = all
            .into_iter()
            .filter(|(c, _)| c.iter().all(|&x| x >= 0))
            .map(|(c, d)| {
                let fw: Vec<i64> = (0..n)
                    .map(|r| (0..n).map(|j| cartan[r][j] * c[j]).sum())
                    .collect();
                PositiveRoot {
                    root_coords: c,
                    coroot_coords: d,
                    fw_coords: fw,
                }
            })
            .collect();
        positive_roots.sort_by(|a, b| {
            (a.height(), &a.root_coords).cmp(&(b.height(), &b.root_coords))
        });
        for r in &positive_roots {
            let norm: i64 = r
                .coroot_coords
                .iter()
                .zip(&r.fw_coords)
                .map(|(d, f)| d * f)
                .sum();
            assert_eq!(norm, 2, "root/coroot pairing must be 2");
        }

        // Highest coroot = unique coroot of maximal height in the dual
        // system; it is the coroot of the highest short root.
        let alpha0_index = {
            let heights: Vec<i64> = positive_roots
                .iter()
                .map(|r| r.coroot_coords.iter().sum())
                .collect();
            let max = *heights.iter().max().unwrap();
            let idxs: Vec<usize> = (0..heights.len()).filter(|&i| heights[i] == max).collect();
            assert_eq!(idxs.len(), 1, "highest coroot must be unique");
            idxs[0]
        };
        let coxeter_number = 1 + positive_roots[alpha0_index]
            .coroot_coords
            .iter()
            .sum::<i64>();

        Ok(RootSystem {
            label,
            cartan,
            adjugate,
            det,
            symmetrizer,
            positive_roots,
            rho: Weight(vec![1; n]),
            alpha0_index,
            coxeter_number,
        })
    }

    pub fn label(&self) -> TypeLabel {
        self.label
    }

    pub fn rank(&self) -> usize {
        self.label.rank
    }

    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    pub fn cartan_det(&self) -> i64 {
        self.det
    }

    pub fn symmetrizer(&self) -> &[i64] {
        &self.symmetrizer
    }

    pub fn positive_roots(&self) -> &[PositiveRoot] {
        &self.positive_roots
    }

    pub fn num_positive_roots(&self) -> usize {
        self.positive_roots.len()
    }

    pub fn rho(&self) -> &Weight {
        &self.rho
    }

    /// The highest coroot, in simple-coroot coordinates.
    pub fn alpha0_coroot(&self) -> &[i64] {
        &self.positive_roots[self.alpha0_index].coroot_coords
    }

    /// The highest short root (whose coroot is the highest coroot).
    pub fn alpha0(&self) -> &PositiveRoot {
        &self.positive_roots[self.alpha0_index]
    }

    pub fn coxeter_number(&self) -> i64 {
        self.coxeter_number
    }

    /// Natural pairing of a weight with a coroot given in simple-coroot
    /// coordinates.
    pub fn pairing(&self, w: &Weight, coroot: &[i64]) -> i64 {
        w.0.iter().zip(coroot).map(|(a, b)| a * b).sum()
    }

    /// Fundamental-weight coordinates of the i-th simple root.
    pub fn simple_root_fw(&self, i: usize) -> Vec<i64> {
        (0..self.rank()).map(|r| self.cartan[r][i]).collect()
    }

    /// Apply the i-th simple reflection.
    pub fn simple_reflect(&self, w: &Weight, i: usize) -> Weight {
        let mut out = w.clone();
        self.simple_reflect_in_place(&mut out, i);
        out
    }

    pub fn simple_reflect_in_place(&self, w: &mut Weight, i: usize) {
        let c = w.0[i];
        if c != 0 {
            for r in 0..self.rank() {
                w.0[r] -= c * self.cartan[r][i];
            }
        }
    }

    /// The W-orbit of a weight, sorted.
    pub fn weyl_orbit(&self, w: &Weight) -> Vec<Weight> {
        let mut seen: HashSet<Weight> = HashSet::new();
        let mut queue = VecDeque::new();
        seen.insert(w.clone());
        queue.push_back(w.clone());
        while let Some(x) = queue.pop_front() {
            for i in 0..self.rank() {
                let y = self.simple_reflect(&x, i);
                if seen.insert(y.clone()) {
                    queue.push_back(y);
                }
            }
        }
        let mut out: Vec<Weight> = seen.into_iter().collect();
        out.sort();
        out
    }

    /// The unique dominant element of the W-orbit.
    pub fn dominant_representative(&self, w: &Weight) -> Weight {
        let mut x = w.clone();
        loop {
            match x.0.iter().position(|&c| c < 0) {
                Some(i) => self.simple_reflect_in_place(&mut x, i),
                None => return x,
            }
        }
    }

    /// Exact simple-root coordinates of a weight, or None when the weight is
    /// not in the root lattice.
    pub fn root_coords(&self, w: &Weight) -> Option<Vec<i64>> {
        let n = self.rank();
        let mut out = Vec::with_capacity(n);
        for r in 0..n {
            let t: i64 = (0..n).map(|j| self.adjugate[r][j] * w.0[j]).sum();
            if t % self.det != 0 {
                return None;
            }
            out.push(t / self.det);
        }
        Some(out)
    }

    /// Root coordinates scaled by the Cartan determinant (always integral).
    pub fn scaled_root_coords(&self, w: &Weight) -> Vec<i64> {
        let n = self.rank();
        (0..n)
            .map(|r| (0..n).map(|j| self.adjugate[r][j] * w.0[j]).sum())
            .collect()
    }

    /// Height of a weight scaled by the Cartan determinant: a linear form
    /// that is strictly positive on positive roots.
    pub fn scaled_height(&self, w: &Weight) -> i64 {
        self.scaled_root_coords(w).iter().sum()
    }

    /// The standard dominance order: true iff `la - mu` is a non-negative
    /// integer combination of simple roots.
    pub fn dominance_leq(&self, mu: &Weight, la: &Weight) -> bool {
        let n = self.rank();
        for r in 0..n {
            let t: i64 = (0..n)
                .map(|j| self.adjugate[r][j] * (la.0[j] - mu.0[j]))
                .sum();
            if t < 0 || t % self.det != 0 {
                return false;
            }
        }
        true
    }

    /// Total order refining dominance: scaled height first, then
    /// lexicographic.
    pub fn height_lex_cmp(&self, a: &Weight, b: &Weight) -> std::cmp::Ordering {
        self.scaled_height(a)
            .cmp(&self.scaled_height(b))
            .then_with(|| a.cmp(b))
    }

    /// The minimal dominant representative of the root-lattice coset of `w`
    /// (zero or a minuscule fundamental weight); every dominant weight in
    /// the coset dominates it.
    pub fn minimal_coset_rep(&self, w: &Weight) -> Weight {
        let n = self.rank();
        let mut candidates = vec![Weight::zero(n)];
        for i in 0..n {
            let mut c = vec![0; n];
            c[i] = 1;
            candidates.push(Weight(c));
        }
        let integral: Vec<Weight> = candidates
            .into_iter()
            .filter(|c| self.root_coords(&w.sub(c)).is_some())
            .collect();
        for c in &integral {
            if integral.iter().all(|other| self.dominance_leq(c, other)) {
                return c.clone();
            }
        }
        unreachable!("every coset has a minimal dominant representative");
    }

    /// Check the rank of a weight against this system.
    pub fn check_weight(&self, w: &Weight) -> Result<(), Error> {
        if w.rank() != self.rank() {
            return Err(Error::WeightRank {
                expected: self.rank(),
                got: w.rank(),
            });
        }
        Ok(())
    }

    /// Enumerate the finite Weyl group as matrices on fundamental-weight
    /// coordinates, with determinant signs. Intended as a test and
    /// cross-check utility for small ranks.
    pub fn finite_weyl_elements(&self) -> Vec<(Vec<Vec<i64>>, i64)> {
        let n = self.rank();
        let id: Vec<Vec<i64>> = (0..n)
            .map(|i| (0..n).map(|j| i64::from(i == j)).collect())
            .collect();
        let mut seen: HashSet<Vec<Vec<i64>>> = HashSet::new();
        seen.insert(id.clone());
        let mut queue = VecDeque::new();
        queue.push_back((id.clone(), 1i64));
        let mut out = vec![(id, 1)];
        while let Some((m, s)) = queue.pop_front() {
            for i in 0..n {
                // m * s_i: column operation c_i -> c_i - sum_j cartan[j][i] c_j
                let mut m2 = m.clone();
                for r in 0..n {
                    let mut v = 0;
                    for j in 0..n {
                        v += m[r][j] * self.cartan[j][i];
                    }
                    m2[r][i] = m[r][i] - v;
                }
                if seen.insert(m2.clone()) {
                    out.push((m2.clone(), -s));
                    queue.push_back((m2, -s));
                }
            }
        }
        out
    }

    /// A reduced word for the longest element of the finite Weyl group.
    pub fn longest_element_word(&self) -> Vec<usize> {
        let mut x = self.rho().negated();
        let mut word = Vec::new();
        loop {
            match x.0.iter().position(|&c| c < 0) {
                Some(i) => {
                    self.simple_reflect_in_place(&mut x, i);
                    word.push(i);
                }
                None => return word,
            }
        }
    }
}

/// Builds the root system for a label such as "A3".
pub fn build_root_system(label: &str) -> Result<RootSystem, Error> {
    RootSystem::new(label.parse()?)
}
