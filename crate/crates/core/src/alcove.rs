//! The affine Weyl group in the alcove model.
//!
//! An element is realized as an exact integer affine map on
//! fundamental-weight coordinates under the dot action. Translation parts
//! are affine-linear in the arrangement parameter, so one element serves
//! every p; the normalized arrangement (p = 1) supplies the canonical
//! alcove coordinates: for each positive root alpha the integer k_alpha
//! with k_alpha < <x + rho, alpha_v> < k_alpha + 1 on the open alcove.

use std::fmt;

use crate::affine::AffineContext;
use crate::error::Error;
use crate::rootdata::RootSystem;
use crate::weight::Weight;

/// An element of the affine Weyl group, as the dot-action affine map
/// `x -> M x + u + p v` together with its alcove data in the normalized
/// arrangement.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AffineElement {
    /// Linear part, row-major n x n, acting on fundamental-weight coords.
    mat: Vec<i64>,
    /// Constant translation part.
    u: Vec<i64>,
    /// Translation part proportional to the arrangement parameter.
    v: Vec<i64>,
    /// Alcove coordinates, one per positive root, in the order of
    /// `RootSystem::positive_roots`. Canonical: determines the element.
    coords: Vec<i64>,
    length: i64,
}

impl AffineElement {
    pub fn identity(rs: &RootSystem) -> Self {
        let n = rs.rank();
        let mut mat = vec![0i64; n * n];
        for i in 0..n {
            mat[i * n + i] = 1;
        }
        AffineElement {
            mat,
            u: vec![0; n],
            v: vec![0; n],
            coords: vec![0; rs.num_positive_roots()],
            length: 0,
        }
    }

    /// Alcove coordinates in the normalized arrangement; the identity is the
    /// zero vector (the fundamental alcove).
    pub fn alcove_coords(&self) -> &[i64] {
        &self.coords
    }

    /// Coxeter length: the number of arrangement hyperplanes separating the
    /// alcove from the fundamental alcove, which is the sum of |k_alpha|.
    pub fn length(&self) -> i64 {
        self.length
    }

    pub fn is_identity(&self) -> bool {
        self.coords.iter().all(|&k| k == 0)
    }

    fn recompute_alcove_data(&mut self, rs: &RootSystem) {
        let n = rs.rank();
        let h = rs.coxeter_number();
        // interior sample point of the fundamental alcove: z + rho = rho/h,
        // tracked as an integer numerator over denominator h
        let mut num = vec![0i64; n];
        for r in 0..n {
            // (M * (rho/h - rho) + u + v + rho) * h
            let mut acc = 0i64;
            for j in 0..n {
                acc += self.mat[r * n + j] * (1 - h);
            }
            num[r] = acc + h * (self.u[r] + self.v[r] + 1);
        }
        self.coords.clear();
        self.length = 0;
        for root in rs.positive_roots() {
            let d: i64 = root
                .coroot_coords
                .iter()
                .zip(&num)
                .map(|(c, x)| c * x)
                .sum();
            assert!(d % h != 0, "sample point must avoid all walls");
            let k = d.div_euclid(h);
            self.coords.push(k);
            self.length += k.abs();
        }
    }

    /// Right multiplication by the generator s_i (i = 0 is the affine
    /// generator; i = 1..=n are the simple reflections).
    pub fn apply_generator(&self, rs: &RootSystem, i: usize) -> AffineElement {
        let n = rs.rank();
        let (alpha_fw, row, g_u, g_v): (Vec<i64>, Vec<i64>, Vec<i64>, Vec<i64>) = if i == 0 {
            let alpha = rs.alpha0();
            let fw = alpha.fw_coords.clone();
            let row = alpha.coroot_coords.clone();
            let h = rs.coxeter_number();
            let u: Vec<i64> = fw.iter().map(|f| -(h - 1) * f).collect();
            let v: Vec<i64> = fw.clone();
            (fw, row, u, v)
        } else {
            let idx = i - 1;
            assert!(idx < n, "generator index out of range");
            let fw = rs.simple_root_fw(idx);
            let mut row = vec![0i64; n];
            row[idx] = 1;
            let u: Vec<i64> = fw.iter().map(|f| -f).collect();
            (fw, row, u, vec![0; n])
        };

        // compose self with the generator map g(x) = x - <x,row> fw + g_u + p g_v:
        // (self . g)(x) = M (x - <x,row> fw) + M g_u + u + p (M g_v + v)
        let mut m_fw = vec![0i64; n];
        for r in 0..n {
            let mut acc = 0;
            for j in 0..n {
                acc += self.mat[r * n + j] * alpha_fw[j];
            }
            m_fw[r] = acc;
        }
        let mut mat = self.mat.clone();
        for r in 0..n {
            for c in 0..n {
                mat[r * n + c] -= m_fw[r] * row[c];
            }
        }
        let apply = |m: &[i64], x: &[i64]| -> Vec<i64> {
            (0..n)
                .map(|r| (0..n).map(|j| m[r * n + j] * x[j]).sum())
                .collect()
        };
        let mu = apply(&self.mat, &g_u);
        let mv = apply(&self.mat, &g_v);
        let u: Vec<i64> = (0..n).map(|r| mu[r] + self.u[r]).collect();
        let v: Vec<i64> = (0..n).map(|r| mv[r] + self.v[r]).collect();
        let mut out = AffineElement {
            mat,
            u,
            v,
            coords: Vec::new(),
            length: 0,
        };
        out.recompute_alcove_data(rs);
        out
    }

    /// Composition (self applied after other): the element self * other.
    pub fn compose(&self, rs: &RootSystem, other: &AffineElement) -> AffineElement {
        let n = rs.rank();
        let mut mat = vec![0i64; n * n];
        for r in 0..n {
            for c in 0..n {
                let mut acc = 0;
                for j in 0..n {
                    acc += self.mat[r * n + j] * other.mat[j * n + c];
                }
                mat[r * n + c] = acc;
            }
        }
        let apply = |x: &[i64]| -> Vec<i64> {
            (0..n)
                .map(|r| (0..n).map(|j| self.mat[r * n + j] * x[j]).sum())
                .collect()
        };
        let ou = apply(&other.u);
        let ov = apply(&other.v);
        let u: Vec<i64> = (0..n).map(|r| ou[r] + self.u[r]).collect();
        let v: Vec<i64> = (0..n).map(|r| ov[r] + self.v[r]).collect();
        let mut out = AffineElement {
            mat,
            u,
            v,
            coords: Vec::new(),
            length: 0,
        };
        out.recompute_alcove_data(rs);
        out
    }

    pub fn inverse(&self, rs: &RootSystem) -> AffineElement {
        let n = rs.rank();
        // the linear part is a Weyl group matrix, det = +-1; invert exactly
        let det_adj = invert_unimodular(&self.mat, n);
        let apply = |x: &[i64]| -> Vec<i64> {
            (0..n)
                .map(|r| (0..n).map(|j| det_adj[r * n + j] * x[j]).sum())
                .collect()
        };
        let u: Vec<i64> = apply(&self.u).iter().map(|x| -x).collect();
        let v: Vec<i64> = apply(&self.v).iter().map(|x| -x).collect();
        let mut out = AffineElement {
            mat: det_adj,
            u,
            v,
            coords: Vec::new(),
            length: 0,
        };
        out.recompute_alcove_data(rs);
        out
    }

    /// Apply the element to a weight under the dot action with parameter p.
    pub fn dot_apply(&self, nu: &Weight, p: i64) -> Weight {
        let n = nu.rank();
        Weight(
            (0..n)
                .map(|r| {
                    let mut acc = 0;
                    for j in 0..n {
                        acc += self.mat[r * n + j] * nu.0[j];
                    }
                    acc + self.u[r] + p * self.v[r]
                })
                .collect(),
        )
    }

    /// Right descent test: length decreases on multiplying by s_i.
    pub fn has_right_descent(&self, rs: &RootSystem, i: usize) -> bool {
        self.apply_generator(rs, i).length() < self.length
    }

    /// The first right descent (any i with l(w s_i) < l(w)); None for the
    /// identity.
    pub fn first_right_descent(&self, rs: &RootSystem) -> Option<usize> {
        if self.is_identity() {
            return None;
        }
        let found = (0..=rs.rank()).find(|&i| self.has_right_descent(rs, i));
        debug_assert!(found.is_some(), "non-identity element must have a descent");
        found
    }

    /// A reduced word, obtained by stripping right descents.
    pub fn reduced_word(&self, rs: &RootSystem) -> Vec<usize> {
        let mut w = self.clone();
        let mut word = Vec::with_capacity(self.length as usize);
        while let Some(i) = w.first_right_descent(rs) {
            w = w.apply_generator(rs, i);
            word.push(i);
        }
        word.reverse();
        word
    }

    /// True on alcoves contained in the dominant cone.
    pub fn is_dominant_alcove(&self, rs: &RootSystem) -> bool {
        rs.positive_roots()
            .iter()
            .zip(&self.coords)
            .filter(|(root, _)| root.height() == 1)
            .all(|(_, &k)| k >= 0)
    }
}

impl fmt::Display for AffineElement {
    fmt_coords!();
}

macro_rules! fmt_coords {
    () => {
        fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
            write!(f, "[")?;
            for (i, k) in self.coords.iter().enumerate() {
                if i > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{k}")?;
            }
            write!(f, "]")
        }
    };
}
use fmt_coords;

fn invert_unimodular(mat: &[i64], n: usize) -> Vec<i64> {
    // Gauss-Jordan over the rationals is unnecessary: Weyl matrices have
    // det +-1, so the adjugate divided by det is integral. Compute the
    // inverse by solving with exact integer row reduction on an augmented
    // i128 matrix.
    let mut a: Vec<Vec<i128>> = (0..n)
        .map(|r| {
            let mut row: Vec<i128> = (0..n).map(|c| mat[r * n + c] as i128).collect();
            row.extend((0..n).map(|c| i128::from(r == c)));
            row
        })
        .collect();
    // fraction-free forward elimination, then back substitution
    for col in 0..n {
        let piv = (col..n).find(|&r| a[r][col] != 0).expect("singular matrix");
        a.swap(col, piv);
        for r in 0..n {
            if r != col && a[r][col] != 0 {
                let (x, y) = (a[col][col], a[r][col]);
                for c in 0..2 * n {
                    a[r][c] = a[r][c] * x - a[col][c] * y;
                }
                // keep entries small
                let g = row_gcd(&a[r]);
                if g > 1 {
                    for c in 0..2 * n {
                        a[r][c] /= g;
                    }
                }
            }
        }
    }
    let mut out = vec![0i64; n * n];
    for r in 0..n {
        let d = a[r][r];
        for c in 0..n {
            let num = a[r][n + c];
            assert_eq!(num % d, 0, "matrix inverse must be integral");
            out[r * n + c] = i64::try_from(num / d).unwrap();
        }
    }
    out
}

fn row_gcd(row: &[i128]) -> i128 {
    let mut g = 0i128;
    for &x in row {
        let mut a = g.abs();
        let mut b = x.abs();
        while b != 0 {
            let t = a % b;
            a = b;
            b = t;
        }
        g = a;
        if g == 1 {
            return 1;
        }
    }
    g.max(1)
}

/// The longest element of the finite Weyl group as an affine element.
pub fn longest_finite_element(rs: &RootSystem) -> AffineElement {
    let mut w = AffineElement::identity(rs);
    for i in rs.longest_element_word() {
        w = w.apply_generator(rs, i + 1);
    }
    w
}

/// The unique affine element whose alcove (for the arrangement with
/// parameter p) contains the p-regular weight nu.
pub fn weight_to_affine(ctx: &AffineContext, nu: &Weight) -> Result<AffineElement, Error> {
    let rs = ctx.root_system();
    rs.check_weight(nu)?;
    if !ctx.is_p_regular(nu) {
        return Err(Error::PSingular(nu.clone()));
    }
    let p = ctx.p();
    let n = rs.rank();
    let mut z = nu.clone();
    let mut word: Vec<usize> = Vec::new();
    loop {
        let mut moved = false;
        for i in 0..n {
            if z.0[i] + 1 < 0 {
                // dot reflection through the i-th simple wall
                let c = z.0[i] + 1;
                for (r, f) in rs.simple_root_fw(i).iter().enumerate() {
                    z.0[r] -= c * f;
                }
                word.push(i + 1);
                moved = true;
                break;
            }
        }
        if moved {
            continue;
        }
        let alpha = rs.alpha0();
        let c: i64 = alpha
            .coroot_coords
            .iter()
            .zip(&z.0)
            .map(|(d, x)| d * (x + 1))
            .sum();
        if c > p {
            let t = c - p;
            for (r, f) in alpha.fw_coords.iter().enumerate() {
                z.0[r] -= t * f;
            }
            word.push(0);
            continue;
        }
        break;
    }
    let mut w = AffineElement::identity(rs);
    for &i in &word {
        w = w.apply_generator(rs, i);
    }
    Ok(w)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootdata::build_root_system;
    use std::sync::Arc;

    fn rs(s: &str) -> RootSystem {
        build_root_system(s).unwrap()
    }

    #[test]
    fn identity_and_involutions() {
        let a2 = rs("A2");
        let e = AffineElement::identity(&a2);
        assert_eq!(e.length(), 0);
        assert!(e.alcove_coords().iter().all(|&k| k == 0));
        for i in 0..=2 {
            let s = e.apply_generator(&a2, i);
            assert_eq!(s.length(), 1);
            assert_eq!(s.apply_generator(&a2, i), e);
        }
    }

    #[test]
    fn infinite_dihedral_lengths() {
        let a1 = rs("A1");
        let mut w = AffineElement::identity(&a1);
        for k in 1..=8 {
            w = w.apply_generator(&a1, k % 2); // s0 s1 s0 s1 ...
            assert_eq!(w.length(), k as i64);
        }
    }

    #[test]
    fn braid_relations_hold() {
        // (s_i s_j)^m = e where m comes from the product of Cartan pairings
        let a2 = rs("A2");
        let e = AffineElement::identity(&a2);
        let pairs = [(0usize, 1usize, 3u32), (0, 2, 3), (1, 2, 3)];
        for (i, j, m) in pairs {
            let mut w = e.clone();
            for _ in 0..m {
                w = w.apply_generator(&a2, i).apply_generator(&a2, j);
            }
            assert_eq!(w, e, "({i},{j})^{m}");
        }
        let a3 = rs("A3");
        let e = AffineElement::identity(&a3);
        // s0 commutes with s2 in affine A3
        let w = e
            .apply_generator(&a3, 0)
            .apply_generator(&a3, 2)
            .apply_generator(&a3, 0)
            .apply_generator(&a3, 2);
        assert_eq!(w, e);
    }

    #[test]
    fn rank_two_reduced_word() {
        let a2 = rs("A2");
        let w = AffineElement::identity(&a2)
            .apply_generator(&a2, 0)
            .apply_generator(&a2, 1)
            .apply_generator(&a2, 2);
        assert_eq!(w.length(), 3);
        assert_eq!(w.reduced_word(&a2).len(), 3);
    }

    #[test]
    fn alcove_consistency_conditions() {
        // k_beta + k_gamma <= k_alpha <= k_beta + k_gamma + 1 when
        // alpha = beta + gamma
        let a3 = rs("A3");
        let mut w = AffineElement::identity(&a3);
        let word = [0usize, 1, 3, 2, 0, 1, 0, 2, 3, 0];
        for &i in &word {
            w = w.apply_generator(&a3, i);
            let roots = a3.positive_roots();
            for (ai, aroot) in roots.iter().enumerate() {
                for (bi, broot) in roots.iter().enumerate() {
                    for (ci, croot) in roots.iter().enumerate() {
                        let sum: Vec<i64> = broot
                            .root_coords
                            .iter()
                            .zip(&croot.root_coords)
                            .map(|(x, y)| x + y)
                            .collect();
                        if sum == aroot.root_coords {
                            let (ka, kb, kc) =
                                (w.alcove_coords()[ai], w.alcove_coords()[bi], w.alcove_coords()[ci]);
                            assert!(kb + kc <= ka && ka <= kb + kc + 1);
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn compose_matches_generator_application() {
        let a2 = rs("A2");
        let e = AffineElement::identity(&a2);
        let a = e.apply_generator(&a2, 0).apply_generator(&a2, 1);
        let b = e.apply_generator(&a2, 2).apply_generator(&a2, 0);
        let ab = a.compose(&a2, &b);
        let direct = a
            .apply_generator(&a2, 2)
            .apply_generator(&a2, 0);
        assert_eq!(ab, direct);
        assert_eq!(a.compose(&a2, &a.inverse(&a2)), e);
    }

    #[test]
    fn dot_apply_generators() {
        let a1 = rs("A1");
        let e = AffineElement::identity(&a1);
        let s1 = e.apply_generator(&a1, 1);
        // s1 . x = x - (x+1) alpha = -x - 2
        assert_eq!(s1.dot_apply(&Weight(vec![3]), 5), Weight(vec![-5]));
        let s0 = e.apply_generator(&a1, 0);
        // s0 . x = x - (x + 1 - p) alpha
        assert_eq!(s0.dot_apply(&Weight(vec![0]), 5), Weight(vec![8]));
    }

    #[test]
    fn weight_to_affine_examples() {
        let a1 = Arc::new(rs("A1"));
        let ctx = AffineContext::new(Arc::clone(&a1), 5).unwrap();
        let e = AffineElement::identity(&a1);
        assert_eq!(weight_to_affine(&ctx, &Weight(vec![3])).unwrap(), e);
        let w = weight_to_affine(&ctx, &Weight(vec![6])).unwrap();
        assert_eq!(w.length(), 1);
        assert_eq!(w.alcove_coords(), &[1]);
        assert!(weight_to_affine(&ctx, &Weight(vec![4])).is_err());
    }

    #[test]
    fn weight_to_affine_round_trip() {
        let a2 = Arc::new(rs("A2"));
        let ctx = AffineContext::new(Arc::clone(&a2), 5).unwrap();
        // w . 0 lies in w C0; mapping it back recovers w
        let words: [&[usize]; 5] = [&[], &[0], &[0, 1], &[0, 1, 2, 0], &[2, 0, 1, 0, 2]];
        for word in words {
            let mut w = AffineElement::identity(&a2);
            for &i in word {
                w = w.apply_generator(&a2, i);
            }
            let nu = w.dot_apply(&Weight(vec![0, 0]), 5);
            assert_eq!(weight_to_affine(&ctx, &nu).unwrap(), w);
        }
    }

    #[test]
    fn longest_finite_element_properties() {
        let a3 = rs("A3");
        let w0 = longest_finite_element(&a3);
        // w0 . (-rho shifted): as linear map it sends rho to -rho
        let img = w0.dot_apply(&Weight(vec![0, 0, 0]), 1);
        // w0 . 0 = w0(rho) - rho = -2rho
        assert_eq!(img, Weight(vec![-2, -2, -2]));
        assert_eq!(w0.compose(&a3, &w0), AffineElement::identity(&a3));
    }
}
