//! Catalog of spherical conjugacy classes: dimensions, dense Bruhat cells
//! and explicit representatives.

mod classical;
mod exceptional;
mod identities;

use std::cmp::Ordering;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::arith::{parse_scalar, ExactMatrix, Scalar};
use crate::groups::{GroupContext, GroupElement, GroupError, Partition};
use crate::roots::{cascade, CartanType, CascadeKind, Family, Root, RootError, RootSystem, WeylElement};

pub use classical::MatrixRecipe;
pub use exceptional::{coweight_dim_oracle, graded_dim_oracle};
pub use identities::{proof_identities, MatrixIdentity};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum AtlasError {
    #[error("unsupported group {0:?}")]
    UnsupportedGroup(String),
    #[error("{0} has no matrix model")]
    NoMatrixModel(String),
    #[error("cascade root {name} of kind {kind:?} is not available in {group}")]
    CascadeUnavailable { group: String, kind: CascadeKind, name: String },
    #[error("roots are not pairwise orthogonal")]
    NotOrthogonal,
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Root(#[from] RootError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ClassKind {
    Unipotent,
    Semisimple,
    Mixed,
}

/// One factor of a Weyl group element written as a product of reflections.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ZFactor {
    /// Reflection in a named cascade root, e.g. `nu_2` of the mu/nu cascade.
    Cascade { kind: CascadeKind, name: String },
    /// Simple reflection, 1-based.
    Simple(usize),
    /// Reflection in a root given in simple-root coordinates.
    Root(Vec<i64>),
    /// The longest element.
    Longest,
}

impl ZFactor {
    pub fn beta(i: usize) -> Self {
        ZFactor::Cascade { kind: CascadeKind::Beta, name: format!("beta_{i}") }
    }

    pub fn gamma(i: usize) -> Self {
        ZFactor::Cascade { kind: CascadeKind::Gamma, name: format!("gamma_{i}") }
    }

    pub fn gamma_prime(i: usize) -> Self {
        let name = if i == 1 { "gamma_1".to_string() } else { format!("gamma'_{i}") };
        ZFactor::Cascade { kind: CascadeKind::GammaPrime, name }
    }

    pub fn mu_nu(name: &str) -> Self {
        ZFactor::Cascade { kind: CascadeKind::MuNu, name: name.to_string() }
    }

    /// The first `len` names of the mu/nu cascade: `beta_1, mu_1, nu_1, mu_2, ...`.
    pub fn mu_nu_prefix(len: usize) -> Vec<Self> {
        let mut out = vec![Self::mu_nu("beta_1")];
        let mut r = 1;
        while out.len() < len {
            out.push(Self::mu_nu(&format!("mu_{r}")));
            if out.len() < len {
                out.push(Self::mu_nu(&format!("nu_{r}")));
            }
            r += 1;
        }
        out.truncate(len);
        out
    }

    fn label(&self) -> String {
        match self {
            ZFactor::Cascade { name, .. } => name.clone(),
            ZFactor::Simple(i) => format!("alpha_{i}"),
            ZFactor::Root(c) => format!("{}", Root(c.clone())),
            ZFactor::Longest => "w0".into(),
        }
    }
}

/// Evaluate a product of reflections, left to right.
pub fn evaluate_word(rs: &Arc<RootSystem>, factors: &[ZFactor]) -> Result<WeylElement, AtlasError> {
    let mut w = WeylElement::identity(rs);
    for f in factors {
        let next = match f {
            ZFactor::Cascade { kind, name } => {
                let unavailable = || AtlasError::CascadeUnavailable {
                    group: rs.cartan_type().to_string(),
                    kind: *kind,
                    name: name.clone(),
                };
                let c = cascade(rs, *kind).map_err(|_| unavailable())?;
                let root = c.get(name).ok_or_else(unavailable)?;
                WeylElement::reflection(rs, root)?
            }
            ZFactor::Simple(i) => WeylElement::from_word(rs, &[*i])?,
            ZFactor::Root(c) => WeylElement::reflection(rs, &Root(c.clone()))?,
            ZFactor::Longest => WeylElement::longest(rs),
        };
        w = w.compose(&next);
    }
    Ok(w)
}

/// Value substituted for `t` by [`SphericalRecord::sampling_representative`];
/// any value other than `0, 1, -1` gives a class of the same family.
pub const SAMPLING_T: i64 = 3;

/// Class data independent of a particular representative.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize, Default)]
pub struct Descriptor {
    /// Jordan type of the unipotent part, classical groups.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub partition: Option<Partition>,
    /// Orbit label of the unipotent part, exceptional groups.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub orbit: Option<String>,
    /// Label of the semisimple part.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub semisimple: Option<String>,
    /// Eigenvalues of the semisimple part with multiplicities, as scalar
    /// literals in `Q(zeta_m)(t)` for `m = cyclotomic_order`.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub eigenvalues: Vec<(String, usize)>,
    #[serde(default = "one")]
    pub cyclotomic_order: u32,
    /// Mixed classes: the eigenvalue of the semisimple part on whose
    /// eigenspace the unipotent part is trivial.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub unipotent_trivial_on: Option<i64>,
}

fn one() -> u32 {
    1
}

impl Descriptor {
    pub fn eigenvalue_scalars(&self) -> Result<Vec<(Scalar, usize)>, AtlasError> {
        self.eigenvalues
            .iter()
            .map(|(s, k)| {
                parse_scalar(s, self.cyclotomic_order)
                    .map(|v| (v, *k))
                    .map_err(|e| AtlasError::Group(GroupError::Arith(e)))
            })
            .collect()
    }
}

/// How a record is realized or cross-checked.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Recipe {
    Matrix(MatrixRecipe),
    /// Exceptional unipotent class through pairwise orthogonal roots
    /// (simple-root coordinates) of a representative `prod x_beta(1)`.
    GradedRoots(Vec<Vec<i64>>),
    /// Exceptional semisimple class `exp(2 pi i coweight_index / order)`.
    Coweight { index: usize, order: u32 },
    /// Only Weyl-level data.
    WeylOnly,
}

/// Central element `zeta_order^power` times the identity.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CentralTwist {
    pub order: u32,
    pub power: i64,
}

impl CentralTwist {
    pub fn scalar(&self) -> Scalar {
        Scalar::zeta(self.order, self.power).expect("supported order")
    }

    fn label(&self) -> String {
        if self.order == 2 {
            "-1".into()
        } else {
            format!("zeta_{}^{}", self.order, self.power)
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SphericalRecord {
    pub group: String,
    pub kind: ClassKind,
    pub label: String,
    pub dim: usize,
    pub dim_formula: String,
    /// Reduced word of the expected dense cell.
    pub z_word: Vec<usize>,
    pub has_matrix_model: bool,
    pub descriptor: Descriptor,
    /// The expected dense cell as a product of reflections.
    pub z: Vec<ZFactor>,
    pub recipe: Recipe,
    /// Cells known to meet the class, used to pin down `z = w0` without a
    /// matrix model.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub witnesses: Vec<Vec<ZFactor>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub central_twist: Option<CentralTwist>,
}

/// Record under construction; `finish` evaluates the cell.
pub(crate) struct Draft {
    pub kind: ClassKind,
    pub label: String,
    pub dim: usize,
    pub dim_formula: String,
    pub descriptor: Descriptor,
    pub z: Vec<ZFactor>,
    pub recipe: Recipe,
    pub witnesses: Vec<Vec<ZFactor>>,
}

impl Draft {
    pub fn new(kind: ClassKind, label: impl Into<String>, dim: usize, formula: &str, z: Vec<ZFactor>, recipe: Recipe) -> Self {
        Draft {
            kind,
            label: label.into(),
            dim,
            dim_formula: formula.to_string(),
            descriptor: Descriptor { cyclotomic_order: 1, ..Default::default() },
            z,
            recipe,
            witnesses: Vec::new(),
        }
    }

    pub fn partition(mut self, p: Partition) -> Self {
        self.descriptor.partition = Some(p);
        self
    }

    pub fn orbit(mut self, label: &str) -> Self {
        self.descriptor.orbit = Some(label.to_string());
        self
    }

    pub fn semisimple(mut self, label: &str, order: u32, eigen: &[(&str, usize)]) -> Self {
        self.descriptor.semisimple = Some(label.to_string());
        self.descriptor.cyclotomic_order = order;
        self.descriptor.eigenvalues = eigen.iter().filter(|e| e.1 > 0).map(|(s, k)| (s.to_string(), *k)).collect();
        self
    }

    pub fn trivial_on(mut self, sign: i64) -> Self {
        self.descriptor.unipotent_trivial_on = Some(sign);
        self
    }

    pub fn witness(mut self, w: Vec<ZFactor>) -> Self {
        self.witnesses.push(w);
        self
    }

    fn finish(self, rs: &Arc<RootSystem>) -> Result<SphericalRecord, AtlasError> {
        let z = evaluate_word(rs, &self.z)?;
        Ok(SphericalRecord {
            group: rs.cartan_type().to_string(),
            kind: self.kind,
            label: self.label,
            dim: self.dim,
            dim_formula: self.dim_formula,
            z_word: z.reduced_word(),
            has_matrix_model: matches!(self.recipe, Recipe::Matrix(_)),
            descriptor: self.descriptor,
            z: self.z,
            recipe: self.recipe,
            witnesses: self.witnesses,
            central_twist: None,
        })
    }
}

/// Natural order on labels: digit runs compare numerically.
fn natural_cmp(a: &str, b: &str) -> Ordering {
    fn chunks(s: &str) -> Vec<(bool, String)> {
        let mut out: Vec<(bool, String)> = Vec::new();
        for c in s.chars() {
            let d = c.is_ascii_digit();
            match out.last_mut() {
                Some((kd, buf)) if *kd == d => buf.push(c),
                _ => out.push((d, c.to_string())),
            }
        }
        out
    }
    let (ca, cb) = (chunks(a), chunks(b));
    for (x, y) in ca.iter().zip(&cb) {
        let o = match (x.0, y.0) {
            (true, true) => x.1.len().cmp(&y.1.len()).then_with(|| x.1.cmp(&y.1)),
            _ => x.1.cmp(&y.1),
        };
        if o != Ordering::Equal {
            return o;
        }
    }
    ca.len().cmp(&cb.len())
}

fn parse_group(label: &str) -> Result<CartanType, AtlasError> {
    label.parse::<CartanType>().map_err(|_| AtlasError::UnsupportedGroup(label.to_string()))
}

/// All spherical classes of the group, up to central elements, ordered by
/// kind and then label.
pub fn enumerate_spherical(label: &str) -> Result<Vec<SphericalRecord>, AtlasError> {
    let ty = parse_group(label)?;
    let drafts = match ty.family {
        Family::A => classical::type_a(ty.rank),
        Family::B => classical::type_b(ty.rank),
        Family::C => classical::type_c(ty.rank),
        Family::D if ty.rank >= 4 => classical::type_d(ty.rank),
        Family::D => return Err(AtlasError::UnsupportedGroup(format!("{label}: type D needs rank at least 4"))),
        _ => exceptional::drafts(ty),
    };
    let rs = RootSystem::new(ty);
    let mut out = drafts.into_iter().map(|d| d.finish(&rs)).collect::<Result<Vec<_>, _>>()?;
    out.sort_by(|a, b| a.kind.cmp(&b.kind).then_with(|| natural_cmp(&a.label, &b.label)));
    Ok(out)
}

/// Exceptional labels together with classical ranks `lo..=hi` of every family
/// (types B and C from rank 2, type D from rank 4).
pub fn supported_groups(lo: usize, hi: usize) -> Vec<String> {
    let mut out = Vec::new();
    for f in ['A', 'B', 'C', 'D'] {
        for n in lo.max(match f { 'A' => 1, 'D' => 4, _ => 2 })..=hi {
            out.push(format!("{f}{n}"));
        }
    }
    out.extend(["E6", "E7", "E8", "F4", "G2"].map(String::from));
    out
}

impl SphericalRecord {
    pub fn cartan_type(&self) -> CartanType {
        self.group.parse().expect("record group label")
    }

    pub fn root_system(&self) -> Arc<RootSystem> {
        RootSystem::new(self.cartan_type())
    }

    pub fn expected_z(&self) -> Result<WeylElement, AtlasError> {
        evaluate_word(&self.root_system(), &self.z)
    }

    pub fn dimension(&self) -> usize {
        self.dim
    }

    pub fn witness_cells(&self) -> Result<Vec<WeylElement>, AtlasError> {
        let rs = self.root_system();
        self.witnesses.iter().map(|w| evaluate_word(&rs, w)).collect()
    }

    /// Readable form of the expected cell, e.g. `beta_1 nu_1 alpha_4`.
    pub fn z_label(&self) -> String {
        self.z.iter().map(ZFactor::label).collect::<Vec<_>>().join(" ")
    }

    pub fn context(&self) -> Result<Arc<GroupContext>, AtlasError> {
        let ty = self.cartan_type();
        Ok(GroupContext::new(ty.family, ty.rank)?)
    }

    /// Representative of the untwisted class.
    pub fn base_representative(&self) -> Result<GroupElement, AtlasError> {
        match &self.recipe {
            Recipe::Matrix(m) => Ok(m.build(&self.context()?)?),
            _ => Err(AtlasError::NoMatrixModel(format!("{} {}", self.group, self.label))),
        }
    }

    pub fn representative(&self) -> Result<GroupElement, AtlasError> {
        let g = self.base_representative()?;
        match &self.central_twist {
            None => Ok(g),
            Some(c) => {
                let z = GroupElement::central(g.context(), &c.scalar())?;
                Ok(z.mul(&g))
            }
        }
    }

    /// Representative with the class parameter `t` set to [`SAMPLING_T`],
    /// for randomized computations where formal entries are too costly.
    pub fn sampling_representative(&self) -> Result<GroupElement, AtlasError> {
        let g = self.representative()?;
        if g.has_parameter() {
            Ok(g.specialize_t(&Scalar::from_int(SAMPLING_T))?)
        } else {
            Ok(g)
        }
    }

    /// Whether the representative is claimed to lie in the opposite Borel
    /// subgroup (otherwise it is monomial).
    pub fn claims_opposite_borel(&self) -> bool {
        match &self.recipe {
            Recipe::Matrix(m) => m.in_opposite_borel(),
            _ => false,
        }
    }
}

/// Nontrivial scalar matrices in the group: `zeta_m^j` in `SL_m`, `-1` in
/// `Sp_{2n}` and `SO_{2n}`, none in `SO_{2n+1}`.
pub fn central_twists(ty: CartanType) -> Vec<CentralTwist> {
    match ty.family {
        Family::A => {
            let m = ty.rank as u32 + 1;
            (1..m as i64).map(|j| CentralTwist { order: m, power: j }).collect()
        }
        Family::C | Family::D => vec![CentralTwist { order: 2, power: 1 }],
        _ => Vec::new(),
    }
}

/// Records together with their central twists, for matrix-model records.
pub fn expand_central(records: &[SphericalRecord]) -> Vec<SphericalRecord> {
    let mut out = Vec::new();
    for r in records {
        out.push(r.clone());
        if !r.has_matrix_model || r.central_twist.is_some() {
            continue;
        }
        for c in central_twists(r.cartan_type()) {
            let mut t = r.clone();
            t.label = format!("{}*{}", c.label(), r.label);
            t.central_twist = Some(c);
            out.push(t);
        }
    }
    out
}

pub fn export_json(records: &[SphericalRecord]) -> String {
    serde_json::to_string_pretty(records).expect("records serialize")
}

pub fn import_json(src: &str) -> Result<Vec<SphericalRecord>, serde_json::Error> {
    serde_json::from_str(src)
}

/// Matrix with scalar entries lifted to a common cyclotomic order, as
/// strings, with that order.
pub fn matrix_to_strings(m: &ExactMatrix) -> (Vec<Vec<String>>, u32) {
    let order = m.order();
    let rows = (0..m.rows()).map(|i| m.row(i).iter().map(|x| x.lifted(order).to_string()).collect()).collect();
    (rows, order)
}
