//! Records and matrix representatives for the classical groups.

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::arith::{ExactMatrix, Scalar};
use crate::groups::{tau_hat, Embedding, GroupContext, GroupElement, GroupError, Partition};
use crate::roots::Family;

use super::{ClassKind, Draft, Recipe, ZFactor};

/// Constructions of representatives. Parameters are fixed by the record;
/// the rank is taken from the target group.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum MatrixRecipe {
    /// `I + sum_{i<k} E_{m-1-i,i}` in `SL_m`.
    AUnipotent { k: usize },
    /// Lower triangular conjugate of `diag(-eta I_k, eta I_{m-k})`, with
    /// `eta = 1` for even `k` and a primitive `2m`-th root of unity otherwise.
    ATorus { k: usize },
    BX { k: usize },
    BZ { h: usize },
    BZTop,
    BRho { k: usize },
    BLambda,
    BMixedTop,
    BMixed { k: usize },
    CX { k: usize },
    CSigma { k: usize },
    CLambda,
    CC,
    /// `sigma_k` times a transvection on its `+1` eigenspace.
    CMixedA { k: usize },
    /// `sigma_k` times a transvection on its `-1` eigenspace.
    CMixedB { k: usize },
    DX { k: usize },
    DXn { prime: bool },
    DZ { k: usize },
    DSigma { k: usize },
    DC,
    DD,
}

fn int(n: i64) -> Scalar {
    Scalar::from_int(n)
}

fn from_fn(rows: usize, cols: usize, f: impl Fn(usize, usize) -> Scalar) -> ExactMatrix {
    let mut m = ExactMatrix::zeros(rows, cols);
    for i in 0..rows {
        for j in 0..cols {
            m[(i, j)] = f(i, j);
        }
    }
    m
}

fn blocks2(a: &ExactMatrix, b: &ExactMatrix, c: &ExactMatrix, d: &ExactMatrix) -> ExactMatrix {
    let (p, q) = (a.rows(), b.cols());
    let mut m = ExactMatrix::zeros(p + c.rows(), a.cols() + q);
    m.set_block(0, 0, a);
    m.set_block(0, a.cols(), b);
    m.set_block(p, 0, c);
    m.set_block(p, a.cols(), d);
    m
}

/// `n x n` with `k` blocks `(0 1; -1 0)` on the diagonal, zero elsewhere.
fn skew_blocks(k: usize, n: usize) -> ExactMatrix {
    from_fn(n, n, |i, j| {
        if i < 2 * k && j < 2 * k && i / 2 == j / 2 && i != j {
            int(if i < j { 1 } else { -1 })
        } else {
            Scalar::zero()
        }
    })
}

/// `diag(0_p, d I_{n-p})`.
fn tail_diag(p: usize, n: usize, d: Scalar) -> ExactMatrix {
    from_fn(n, n, |i, j| if i == j && i >= p { d.clone() } else { Scalar::zero() })
}

/// `diag(d I_p, 0_{n-p})`.
fn head_diag(p: usize, n: usize, d: Scalar) -> ExactMatrix {
    from_fn(n, n, |i, j| if i == j && i < p { d.clone() } else { Scalar::zero() })
}

/// `(I 0; J_k I)` in `SO_{2n}`.
pub(crate) fn d_unipotent(k: usize, n: usize) -> ExactMatrix {
    let z = ExactMatrix::zeros(n, n);
    blocks2(&ExactMatrix::identity(n), &z, &skew_blocks(k, n), &ExactMatrix::identity(n))
}

/// `(I -J_k; 0 I)`, an element of the Borel subgroup of `SO_{2n}`.
pub(crate) fn d_borel_factor(k: usize, n: usize) -> ExactMatrix {
    let z = ExactMatrix::zeros(n, n);
    blocks2(&ExactMatrix::identity(n), &skew_blocks(k, n).neg(), &z, &ExactMatrix::identity(n))
}

/// `(0_{2k}+I, J_k; J_k, 0_{2k}+I)` in `SO_{2n}`.
pub(crate) fn d_weyl_factor(k: usize, n: usize) -> ExactMatrix {
    let t = tail_diag(2 * k, n, Scalar::one());
    let j = skew_blocks(k, n);
    blocks2(&t, &j, &j, &t)
}

/// Element of `B^-` in `SO_{4m}` over a product of `2m` orthogonal roots.
fn d_z_block(m: usize) -> ExactMatrix {
    let s = 2 * m;
    let f = from_fn(s, s, |i, j| {
        if i == j {
            Scalar::one()
        } else if j == i + 1 && i % 2 == 0 {
            int(-1)
        } else {
            Scalar::zero()
        }
    });
    let sigma = from_fn(s, s, |i, j| {
        let (lo, hi, sign) = if i < j { (i, j, 1) } else { (j, i, -1) };
        let d = hi - lo;
        if d % 2 == 0 || lo % 2 == 1 {
            Scalar::zero()
        } else {
            int(sign * if d == 1 { 1 } else { 2 })
        }
    });
    let finv_t = f.inverse().expect("unipotent").transpose();
    blocks2(&finv_t, &ExactMatrix::zeros(s, s), &f.mul(&sigma), &f)
}

/// The matrix `(1 psi^T 0; 0 a I 0; b psi Sigma c I)` of `SO_{2n+1}` with
/// `psi = e_1` and `Sigma` tridiagonal: `sigma11` at the corner, `1` above
/// and `-1` below the diagonal, scaled by `scale`.
fn b_psi_sigma(n: usize, a: Scalar, b: Scalar, c: Scalar, sigma11: Scalar, scale: Scalar) -> ExactMatrix {
    let mut m = ExactMatrix::zeros(2 * n + 1, 2 * n + 1);
    m[(0, 0)] = Scalar::one();
    m[(0, 1)] = Scalar::one();
    m[(n + 1, 0)] = b;
    for i in 0..n {
        m[(1 + i, 1 + i)] = a.clone();
        m[(n + 1 + i, n + 1 + i)] = c.clone();
        for j in 0..n {
            let s = if i == 0 && j == 0 {
                sigma11.clone()
            } else if j == i + 1 {
                Scalar::one()
            } else if i == j + 1 {
                int(-1)
            } else {
                continue;
            };
            m[(n + 1 + i, 1 + j)] = &scale * &s;
        }
    }
    m
}

/// `(S 0; L S)` in `Sp_{2n}`: `S = diag(s, -s, s, ...)`, `L` with corner
/// `1` and alternating signs next to the diagonal; `flip` reverses the
/// last pair of off-diagonal entries.
fn c_mixed_block(n: usize, s0: i64, flip: bool) -> ExactMatrix {
    let sign = |i: usize| if i.is_multiple_of(2) { s0 } else { -s0 };
    let s = from_fn(n, n, |i, j| if i == j { int(sign(i)) } else { Scalar::zero() });
    let l = from_fn(n, n, |i, j| {
        let last = flip && i.max(j) == n - 1;
        if i == 0 && j == 0 {
            Scalar::one()
        } else if j == i + 1 {
            int(if last { -1 } else { 1 })
        } else if i == j + 1 {
            int(if last { 1 } else { -1 })
        } else {
            Scalar::zero()
        }
    });
    blocks2(&s, &ExactMatrix::zeros(n, n), &l, &s)
}

/// Swap of `e_i` and `e_{n+i}` for `i < 2k` in `SO_{2n}`.
fn d_sigma_block(k: usize, n: usize) -> ExactMatrix {
    let t = tail_diag(2 * k, n, Scalar::one());
    let i = head_diag(2 * k, n, Scalar::one());
    blocks2(&t, &i, &i, &t)
}

fn b_rho_high(n: usize, k: usize) -> ExactMatrix {
    let j = 2 * (n - k) + 1;
    let mut m = ExactMatrix::zeros(2 * n + 1, 2 * n + 1);
    m[(0, 0)] = int(-1);
    for i in 0..n {
        if i < j {
            m[(1 + i, 1 + n + i)] = int(-1);
            m[(1 + n + i, 1 + i)] = int(-1);
        } else {
            m[(1 + i, 1 + i)] = int(-1);
            m[(1 + n + i, 1 + n + i)] = int(-1);
        }
    }
    m
}

/// `(0 J; J 0)` for `n` even, and its variant with `+-i` on the last weight
/// for `n` odd; both square to `-1`.
fn d_c_block(n: usize) -> ExactMatrix {
    if n.is_multiple_of(2) {
        let j = skew_blocks(n / 2, n);
        return blocks2(&ExactMatrix::zeros(n, n), &j, &j, &ExactMatrix::zeros(n, n));
    }
    let i = Scalar::zeta(4, 1).unwrap();
    let j = skew_blocks((n - 1) / 2, n);
    blocks2(&tail_diag(n - 1, n, i.clone()), &j, &j, &tail_diag(n - 1, n, -i))
}

impl MatrixRecipe {
    pub fn build(&self, ctx: &Arc<GroupContext>) -> Result<GroupElement, GroupError> {
        use MatrixRecipe::*;
        let n = ctx.rank();
        let want = match self {
            AUnipotent { .. } | ATorus { .. } => Family::A,
            BX { .. } | BZ { .. } | BZTop | BRho { .. } | BLambda | BMixedTop | BMixed { .. } => Family::B,
            CX { .. } | CSigma { .. } | CLambda | CC | CMixedA { .. } | CMixedB { .. } => Family::C,
            _ => Family::D,
        };
        if ctx.family() != want {
            return Err(GroupError::IncompatibleRecipe(format!("{self:?} for {}", ctx.cartan_type())));
        }
        let lead = |x: &ExactMatrix| Embedding::Leading.apply(ctx, &[x]);
        let t = Scalar::t();
        let tinv = t.inv().unwrap();
        let half = Scalar::from_ratio(1, 2);
        match *self {
            AUnipotent { k } => {
                let m = n + 1;
                GroupElement::new(ctx, ExactMatrix::identity(m).add(&from_fn(m, m, |i, j| {
                    if j < k && i == m - 1 - j { Scalar::one() } else { Scalar::zero() }
                })))
            }
            ATorus { k } => {
                let m = n + 1;
                let eta = if k % 2 == 0 { Scalar::one() } else { Scalar::zeta(2 * m as u32, 1).unwrap() };
                let mat = from_fn(m, m, |i, j| {
                    if i == j {
                        if i < k { -&eta } else { eta.clone() }
                    } else if j < k && i >= m - k && (i - (m - k)) + j == k - 1 {
                        &int(-2) * &eta
                    } else {
                        Scalar::zero()
                    }
                });
                GroupElement::new(ctx, mat)
            }
            BX { k } => lead(&d_unipotent(k, n)),
            BZ { h } => lead(&d_z_block(h + 1)),
            BZTop => GroupElement::new(ctx, b_psi_sigma(n, Scalar::one(), int(-1), Scalar::one(), -&half, Scalar::one())),
            BRho { k } if 2 * k <= n => lead(&d_sigma_block(k, n)),
            BRho { k } => GroupElement::new(ctx, b_rho_high(n, k)),
            BLambda => GroupElement::new(ctx, b_psi_sigma(n, tinv, -&t, t.clone(), -&half, t.clone())),
            BMixedTop => GroupElement::new(ctx, b_psi_sigma(n, int(-1), Scalar::one(), int(-1), half, Scalar::one())),
            BMixed { k } => {
                let p = 2 * k + 1;
                let g = b_psi_sigma(p, int(-1), Scalar::one(), int(-1), half, Scalar::one());
                let rest = ExactMatrix::identity(2 * (n - p)).neg();
                Embedding::BTimesD.apply(ctx, &[&g, &rest])
            }
            CX { k } => {
                let z = ExactMatrix::zeros(n, n);
                let id = ExactMatrix::identity(n);
                GroupElement::new(ctx, blocks2(&id, &z, &head_diag(k, n, Scalar::one()), &id))
            }
            CSigma { k } => {
                let tail = tail_diag(2 * k, n, Scalar::one());
                let s = skew_blocks(k, n);
                GroupElement::new(ctx, blocks2(&tail, &s, &s.neg(), &tail))
            }
            CLambda => {
                let o = Scalar::one;
                let z = Scalar::zero;
                let x = ExactMatrix::from_rows(vec![
                    vec![t.clone(), z(), z(), z()],
                    vec![z(), o(), z(), z()],
                    vec![o(), o(), tinv, z()],
                    vec![t.clone(), z(), z(), o()],
                ])
                .unwrap();
                lead(&x)
            }
            CC => {
                let id = ExactMatrix::identity(n);
                let z = ExactMatrix::zeros(n, n);
                GroupElement::new(ctx, blocks2(&z, &id, &id.neg(), &z))
            }
            CMixedA { k } => lead(&c_mixed_block((2 * k + 1).min(n), 1, false)),
            CMixedB { k } => lead(&c_mixed_block(2 * k, -1, true)),
            DX { k } => GroupElement::new(ctx, d_unipotent(k, n)),
            DXn { prime } => {
                let u = GroupElement::new(ctx, d_unipotent(n / 2, n))?;
                if prime { tau_hat(&u) } else { Ok(u) }
            }
            DZ { k } => lead(&d_z_block(k + 1)),
            DSigma { k } => GroupElement::new(ctx, d_sigma_block(k, n)),
            DC => GroupElement::new(ctx, d_c_block(n)),
            DD if n.is_multiple_of(2) => tau_hat(&GroupElement::new(ctx, d_c_block(n))?),
            DD => GroupElement::new(ctx, d_c_block(n).neg()),
        }
    }

    /// Whether the representative lies in `B^-`; the others are monomial.
    pub fn in_opposite_borel(&self) -> bool {
        use MatrixRecipe::*;
        !matches!(self, BRho { .. } | CSigma { .. } | CC | DSigma { .. } | DC | DD)
    }
}

fn mat(r: MatrixRecipe) -> Recipe {
    Recipe::Matrix(r)
}

fn betas(k: usize) -> Vec<ZFactor> {
    (1..=k).map(ZFactor::beta).collect()
}

fn gammas(k: usize) -> Vec<ZFactor> {
    (1..=k).map(ZFactor::gamma).collect()
}

/// `beta_1, nu_1, ..., nu_{k-1}` of the mu/nu cascade.
fn beta_nus(k: usize) -> Vec<ZFactor> {
    let mut z = vec![ZFactor::mu_nu("beta_1")];
    z.extend((1..k).map(|i| ZFactor::mu_nu(&format!("nu_{i}"))));
    z
}

pub(crate) fn type_a(n: usize) -> Vec<Draft> {
    let m = n + 1;
    let mut out = Vec::new();
    for k in 1..=m / 2 {
        let dim = 2 * k * (m - k);
        out.push(
            Draft::new(ClassKind::Unipotent, format!("X_{{{k},{m}}}"), dim, "2k(m-k)", betas(k), mat(MatrixRecipe::AUnipotent { k }))
                .partition(Partition::x_shape(k, m)),
        );
        let ss = if k % 2 == 0 {
            Draft::new(ClassKind::Semisimple, format!("g_{k}"), dim, "2k(m-k)", betas(k), mat(MatrixRecipe::ATorus { k }))
                .semisimple(&format!("g_{k}"), 1, &[("-1", k), ("1", m - k)])
        } else {
            let label = format!("g_{{zeta,{k}}}");
            Draft::new(ClassKind::Semisimple, label.clone(), dim, "2k(m-k)", betas(k), mat(MatrixRecipe::ATorus { k }))
                .semisimple(&label, 2 * m as u32, &[("-z", k), ("z", m - k)])
        };
        out.push(ss);
    }
    out
}

pub(crate) fn type_b(n: usize) -> Vec<Draft> {
    let size = 2 * n + 1;
    let mut out = Vec::new();
    for k in 1..=n / 2 {
        out.push(
            Draft::new(ClassKind::Unipotent, format!("X_{{{},{size}}}", 2 * k), 4 * k * (n - k), "4k(n-k)", beta_nus(k), mat(MatrixRecipe::BX { k }))
                .partition(Partition::x_shape(2 * k, size)),
        );
    }
    for h in 0..=(n - 1) / 2 {
        let top = 2 * h == n - 1;
        let (z, recipe) = if top {
            (vec![ZFactor::Longest], MatrixRecipe::BZTop)
        } else {
            (gammas(2 * h + 2), MatrixRecipe::BZ { h })
        };
        out.push(
            Draft::new(ClassKind::Unipotent, format!("Z_{{{},{size}}}", 2 * h), 2 * (h + 1) * (2 * n - 2 * h - 1), "2(h+1)(2n-2h-1)", z, mat(recipe))
                .partition(Partition::z_shape(h, size)),
        );
    }
    for k in 1..=n {
        let z = if k <= n / 2 { gammas(2 * k) } else { gammas(2 * (n - k) + 1) };
        let label = format!("rho_{k}");
        out.push(
            Draft::new(ClassKind::Semisimple, label.clone(), 2 * k * (2 * n - 2 * k + 1), "2k(2n-2k+1)", z, mat(MatrixRecipe::BRho { k }))
                .semisimple(&label, 1, &[("-1", 2 * k), ("1", size - 2 * k)]),
        );
    }
    out.push(
        Draft::new(ClassKind::Semisimple, "b_lambda", n * n + n, "n^2+n", vec![ZFactor::Longest], mat(MatrixRecipe::BLambda))
            .semisimple("b_lambda", 1, &[("1", 1), ("t", n), ("1/t", n)]),
    );
    for k in 1..=n / 2 {
        let (z, recipe) = if k == n / 2 {
            (vec![ZFactor::Longest], MatrixRecipe::BMixedTop)
        } else {
            (gammas(2 * k + 1), MatrixRecipe::BMixed { k })
        };
        let dim = 2 * n + 2 * k * (2 * n - 2 * k - 1);
        out.push(
            Draft::new(ClassKind::Mixed, format!("rho_{n}.(X_{{{},{}}},1)", 2 * k, 2 * n), dim, "2n+2k(2n-2k-1)", z, mat(recipe))
                .semisimple(&format!("rho_{n}"), 1, &[("-1", 2 * n), ("1", 1)])
                .partition(Partition::x_shape(2 * k, size))
                .trivial_on(1),
        );
    }
    out
}

pub(crate) fn type_c(n: usize) -> Vec<Draft> {
    let size = 2 * n;
    let mut out = Vec::new();
    for k in 1..=n {
        out.push(
            Draft::new(ClassKind::Unipotent, format!("X_{{{k},{size}}}"), k * (2 * n - k + 1), "k(2n-k+1)", betas(k), mat(MatrixRecipe::CX { k }))
                .partition(Partition::x_shape(k, size)),
        );
    }
    for k in 1..=n / 2 {
        let mut z = vec![ZFactor::gamma_prime(1)];
        z.extend((2..=k).map(ZFactor::gamma_prime));
        let label = format!("sigma_{k}");
        out.push(
            Draft::new(ClassKind::Semisimple, label.clone(), 4 * k * (n - k), "4k(n-k)", z, mat(MatrixRecipe::CSigma { k }))
                .semisimple(&label, 1, &[("-1", 2 * k), ("1", size - 2 * k)]),
        );
    }
    out.push(
        Draft::new(ClassKind::Semisimple, "c_lambda", 4 * n - 2, "4n-2", betas(2), mat(MatrixRecipe::CLambda))
            .semisimple("c_lambda", 1, &[("t", 1), ("1/t", 1), ("1", size - 2)]),
    );
    out.push(
        Draft::new(ClassKind::Semisimple, "c", n * n + n, "n^2+n", vec![ZFactor::Longest], mat(MatrixRecipe::CC))
            .semisimple("c", 4, &[("z", n), ("-z", n)]),
    );
    for k in 1..=n / 2 {
        let sigma = format!("sigma_{k}");
        let eig = [("-1", 2 * k), ("1", size - 2 * k)];
        out.push(
            Draft::new(
                ClassKind::Mixed,
                format!("sigma_{k}.(1,X_{{1,{}}})", size - 2 * k),
                (4 * k + 2) * (n - k),
                "(4k+2)(n-k)",
                betas((2 * k + 1).min(n)),
                mat(MatrixRecipe::CMixedA { k }),
            )
            .semisimple(&sigma, 1, &eig)
            .partition(Partition::x_shape(1, size))
            .trivial_on(-1),
        );
        out.push(
            Draft::new(
                ClassKind::Mixed,
                format!("sigma_{k}.(X_{{1,{}}},1)", 2 * k),
                2 * k * (2 * n - 2 * k + 1),
                "2k(2n-2k+1)",
                betas(2 * k),
                mat(MatrixRecipe::CMixedB { k }),
            )
            .semisimple(&sigma, 1, &eig)
            .partition(Partition::x_shape(1, size))
            .trivial_on(1),
        );
    }
    out
}

pub(crate) fn type_d(n: usize) -> Vec<Draft> {
    let size = 2 * n;
    let mut out = Vec::new();
    let xdim = |k: usize| 2 * k * (2 * n - 2 * k - 1);
    for k in 1..n.div_ceil(2) {
        out.push(
            Draft::new(ClassKind::Unipotent, format!("X_{{{},{size}}}", 2 * k), xdim(k), "2k(2n-2k-1)", beta_nus(k), mat(MatrixRecipe::DX { k }))
                .partition(Partition::x_shape(2 * k, size)),
        );
    }
    if n.is_multiple_of(2) {
        for prime in [false, true] {
            let mut z = beta_nus(n / 2 - 1);
            z.push(ZFactor::Simple(if prime { n - 1 } else { n }));
            let label = format!("X{}_{{{n},{size}}}", if prime { "'" } else { "" });
            out.push(
                Draft::new(ClassKind::Unipotent, label, xdim(n / 2), "n(n-1)", z, mat(MatrixRecipe::DXn { prime }))
                    .partition(Partition::x_shape(n, size)),
            );
        }
    }
    for k in 0..n / 2 {
        out.push(
            Draft::new(
                ClassKind::Unipotent,
                format!("Z_{{{},{size}}}", 2 * k),
                4 * (k + 1) * (n - k - 1),
                "4(k+1)(n-k-1)",
                ZFactor::mu_nu_prefix(2 * k + 2),
                mat(MatrixRecipe::DZ { k }),
            )
            .partition(Partition::z_shape(k, size)),
        );
    }
    for k in 1..=n / 2 {
        let z = if 2 * k < n {
            ZFactor::mu_nu_prefix(2 * k)
        } else {
            let mut z = ZFactor::mu_nu_prefix(n - 2);
            z.extend([ZFactor::Simple(n - 1), ZFactor::Simple(n)]);
            z
        };
        let label = format!("sigma_{k}");
        out.push(
            Draft::new(ClassKind::Semisimple, label.clone(), 4 * k * (n - k), "4k(n-k)", z, mat(MatrixRecipe::DSigma { k }))
                .semisimple(&label, 1, &[("-1", 2 * k), ("1", size - 2 * k)]),
        );
    }
    for (label, recipe, simple) in [("c", MatrixRecipe::DC, n), ("d", MatrixRecipe::DD, n - 1)] {
        let z = if n.is_multiple_of(2) {
            let mut z = beta_nus(n / 2 - 1);
            z.push(ZFactor::Simple(simple));
            z
        } else {
            beta_nus((n - 1) / 2)
        };
        out.push(
            Draft::new(ClassKind::Semisimple, label, n * n - n, "n^2-n", z, mat(recipe)).semisimple(label, 4, &[("z", n), ("-z", n)]),
        );
    }
    out
}
