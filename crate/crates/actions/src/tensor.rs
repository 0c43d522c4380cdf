// SPDX-License-Identifier: Apache-2.0

//! Tensor products `X ⊗_T Y` of a right and a left T-set, obtained by
//! identifying `(xt, y)` with `(x, ty)` and collapsing `x⊗0 = 0⊗y` to one
//! zero class.

use std::collections::BTreeMap;

use grade_group::GroupElement;
use grading::FiniteGraded;
use semigroup_core::{local_units_report, FiniteSemigroup};
use serde::Serialize;

use crate::sset::{GradedSSet, PointedSSet};

struct UnionFind(Vec<usize>);

impl UnionFind {
    fn find(&mut self, mut a: usize) -> usize {
        while self.0[a] != a {
            self.0[a] = self.0[self.0[a]];
            a = self.0[a];
        }
        a
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.0[ra.max(rb)] = ra.min(rb);
        }
    }
}

/// Two representatives `(x, y)` of one class on which a map disagrees.
pub type Clash = ((usize, usize), (usize, usize));

/// The classes of `X ⊗_T Y`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Tensor {
    nx: usize,
    ny: usize,
    class_of: Vec<usize>,
    /// A representative pair `(x, y)` per class.
    pub reps: Vec<(usize, usize)>,
    pub zero_class: usize,
}

impl Tensor {
    /// The class of `x ⊗ y`.
    pub fn class(&self, x: usize, y: usize) -> usize {
        self.class_of[x * self.ny + y]
    }

    pub fn len(&self) -> usize {
        self.reps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.reps.is_empty()
    }

    /// Every pair `(x, y)` in each class.
    pub fn members(&self) -> Vec<Vec<(usize, usize)>> {
        let mut out = vec![Vec::new(); self.len()];
        for x in 0..self.nx {
            for y in 0..self.ny {
                out[self.class(x, y)].push((x, y));
            }
        }
        out
    }

    /// Applies `f` to every pair and checks it is constant on classes.
    /// Returns the value per class, or a pair of clashing representatives.
    pub fn descend<V: Clone + PartialEq>(&self, f: impl Fn(usize, usize) -> V) -> Result<Vec<V>, Clash> {
        let mut out: Vec<Option<(V, (usize, usize))>> = vec![None; self.len()];
        for x in 0..self.nx {
            for y in 0..self.ny {
                let v = f(x, y);
                match &out[self.class(x, y)] {
                    None => out[self.class(x, y)] = Some((v, (x, y))),
                    Some((w, first)) if *w != v => return Err((*first, (x, y))),
                    _ => {}
                }
            }
        }
        Ok(out.into_iter().map(|v| v.expect("classes are nonempty").0).collect())
    }

    /// `deg(x⊗y) = deg(x)deg(y)` on nonzero classes, when it is well defined.
    pub fn grading(
        &self,
        group: &grade_group::GradeGroup,
        dx: &[Option<GroupElement>],
        dy: &[Option<GroupElement>],
    ) -> Option<Vec<Option<GroupElement>>> {
        let zero = self.zero_class;
        let per_pair = |x: usize, y: usize| -> Option<GroupElement> {
            if self.class(x, y) == zero {
                return None;
            }
            Some(group.op(dx[x].as_ref()?, dy[y].as_ref()?))
        };
        self.descend(per_pair).ok()
    }
}

/// `X ⊗_T Y`, where `x.action[t][p]` is read as the right action `p·t`,
/// `y.action[t][q]` as the left action `t·q`, and `T` is the list `over`.
pub fn tensor(x: &PointedSSet, y: &PointedSSet, over: &[usize]) -> Tensor {
    let (nx, ny) = (x.len(), y.len());
    let idx = |p: usize, q: usize| p * ny + q;
    let mut uf = UnionFind((0..nx * ny).collect());
    let zero = idx(x.zero, y.zero);
    for p in 0..nx {
        uf.union(idx(p, y.zero), zero);
    }
    for q in 0..ny {
        uf.union(idx(x.zero, q), zero);
    }
    for &t in over {
        for p in 0..nx {
            for q in 0..ny {
                uf.union(idx(x.act(t, p), q), idx(p, y.act(t, q)));
            }
        }
    }
    let mut ids: BTreeMap<usize, usize> = BTreeMap::new();
    let mut reps = Vec::new();
    let mut class_of = Vec::with_capacity(nx * ny);
    for p in 0..nx {
        for q in 0..ny {
            let root = uf.find(idx(p, q));
            let next = ids.len();
            let c = *ids.entry(root).or_insert_with(|| {
                reps.push((p, q));
                next
            });
            class_of.push(c);
        }
    }
    let zero_class = class_of[zero];
    Tensor { nx, ny, class_of, reps, zero_class }
}

/// The left action `s(x⊗y) = sx⊗y` induced by a left action on `X`, if it
/// is well defined on classes.
pub fn tensor_left_action(
    t: &Tensor,
    left_on_x: &PointedSSet,
    names: impl Fn(usize, usize) -> String,
) -> Option<PointedSSet> {
    let rows = left_on_x.action.len();
    let mut action = Vec::with_capacity(rows);
    for s in 0..rows {
        action.push(t.descend(|x, y| t.class(left_on_x.act(s, x), y)).ok()?);
    }
    let points = t.reps.iter().map(|&(x, y)| names(x, y)).collect();
    Some(PointedSSet { points, zero: t.zero_class, action })
}

/// A sub-carrier `keep` (which must contain the zero point) with the action
/// `f`, restricted to the acting elements `acting`. Other rows send
/// everything to zero; they are never read by a tensor over `acting`.
pub(crate) fn sub_carrier(
    order: usize,
    keep: &[usize],
    zero: usize,
    labels: impl Fn(usize) -> String,
    acting: &[usize],
    f: impl Fn(usize, usize) -> usize,
) -> PointedSSet {
    let pos = |p: usize| keep.iter().position(|&k| k == p);
    let z = pos(zero).expect("zero is kept");
    let mut action = vec![vec![z; keep.len()]; order];
    for &t in acting {
        for (i, &p) in keep.iter().enumerate() {
            action[t][i] = pos(f(t, p)).unwrap_or(z);
        }
    }
    PointedSSet { points: keep.iter().map(|&p| labels(p)).collect(), zero: z, action }
}

/// `S_ε ∪ {0}` as indices.
pub(crate) fn identity_part(gs: &FiniteGraded) -> Vec<usize> {
    let eps = gs.group.identity();
    component_with_zero(gs, &eps)
}

pub(crate) fn component_with_zero(gs: &FiniteGraded, alpha: &GroupElement) -> Vec<usize> {
    let mut out = vec![gs.sg.zero_index()];
    out.extend(gs.component(alpha));
    out.sort_unstable();
    out
}

fn right_regular(sg: &FiniteSemigroup, keep: &[usize], acting: &[usize]) -> PointedSSet {
    sub_carrier(sg.order(), keep, sg.zero_index(), |p| sg.label(p).to_string(), acting, |t, p| sg.m(p, t))
}

fn left_regular_part(sg: &FiniteSemigroup, keep: &[usize], acting: &[usize]) -> PointedSSet {
    sub_carrier(sg.order(), keep, sg.zero_index(), |p| sg.label(p).to_string(), acting, |t, p| sg.m(t, p))
}

/// Status of a map out of a tensor product.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NuReport {
    pub classes: usize,
    pub well_defined: bool,
    pub injective: bool,
    pub surjective: bool,
    pub witness: Vec<String>,
}

impl NuReport {
    pub fn bijective(&self) -> bool {
        self.well_defined && self.injective && self.surjective
    }
}

/// Judges a class map given as one target point per class, or a clash
/// when it is not well defined. `required` lists the points that must be hit.
fn classify(
    t: &Tensor,
    values: Result<Vec<usize>, Clash>,
    required: &[usize],
    name: impl Fn(usize) -> String,
    pair: impl Fn((usize, usize)) -> String,
) -> NuReport {
    let values = match values {
        Ok(v) => v,
        Err((a, b)) => {
            return NuReport {
                classes: t.len(),
                well_defined: false,
                injective: false,
                surjective: false,
                witness: vec![pair(a), pair(b)],
            };
        }
    };
    let mut witness = Vec::new();
    let mut seen: BTreeMap<usize, usize> = BTreeMap::new();
    let mut injective = true;
    for (c, &v) in values.iter().enumerate() {
        if let Some(&other) = seen.get(&v) {
            if injective {
                witness = vec![pair(t.reps[other]), pair(t.reps[c])];
            }
            injective = false;
        } else {
            seen.insert(v, c);
        }
    }
    let missing = required.iter().find(|p| !seen.contains_key(p));
    if let Some(&p) = missing {
        if witness.is_empty() {
            witness = vec![name(p)];
        }
    }
    NuReport { classes: t.len(), well_defined: true, injective, surjective: missing.is_none(), witness }
}

/// `ν_X: S ⊗_{S_ε} X_ε → X`, `s⊗x ↦ sx`.
pub fn nu_check(gs: &FiniteGraded, x: &GradedSSet) -> NuReport {
    let sg = &gs.sg;
    let t_eps = identity_part(gs);
    let all: Vec<usize> = (0..sg.order()).collect();
    let left = right_regular(sg, &all, &t_eps);
    let eps = gs.group.identity();
    let mut keep = vec![x.set.zero];
    keep.extend(x.component(&eps));
    keep.sort_unstable();
    let right = sub_carrier(sg.order(), &keep, x.set.zero, |p| x.set.points[p].clone(), &t_eps, |s, p| x.set.act(s, p));
    let t = tensor(&left, &right, &t_eps);
    let values = t.descend(|s, q| x.set.act(s, keep[q]));
    let required: Vec<usize> = (0..x.set.len()).collect();
    classify(
        &t,
        values,
        &required,
        |p| x.set.points[p].clone(),
        |(s, q)| format!("{}⊗{}", sg.label(s), right.points[q]),
    )
}

/// `μ_Y: (S ⊗_{S_ε} Y)_ε → Y`, `s⊗y ↦ sy`, for a left `S_ε`-set `Y` given by
/// the rows of its action table at the elements of `S_ε`.
pub fn mu_check(gs: &FiniteGraded, y: &PointedSSet) -> NuReport {
    let sg = &gs.sg;
    let t_eps = identity_part(gs);
    let all: Vec<usize> = (0..sg.order()).collect();
    let left = right_regular(sg, &all, &t_eps);
    let t = tensor(&left, y, &t_eps);
    let eps = gs.group.identity();
    // Degree of s⊗y is deg(s); the ε-part is the zero class plus classes with an ε representative.
    let in_eps: Vec<bool> = t
        .descend(|s, q| if t.class(s, q) == t.zero_class { None } else { gs.deg(s).cloned() })
        .map(|d| d.iter().map(|d| d.as_ref().is_none_or(|d| *d == eps)).collect())
        .unwrap_or_else(|_| vec![false; t.len()]);
    let values = t.descend(|s, q| if in_eps[t.class(s, q)] { y.act(s, q) } else { usize::MAX });
    let pair = |(s, q): (usize, usize)| format!("{}⊗{}", sg.label(s), y.points[q]);
    let values = match values {
        Ok(v) => v,
        Err(e) => return classify(&t, Err(e), &[], |p| y.points[p].clone(), pair),
    };
    // Restrict to the ε-classes before judging injectivity and surjectivity.
    let restricted: Vec<usize> = (0..t.len()).filter(|&c| in_eps[c]).collect();
    let sub = Tensor {
        nx: 0,
        ny: 0,
        class_of: Vec::new(),
        reps: restricted.iter().map(|&c| t.reps[c]).collect(),
        zero_class: restricted.iter().position(|&c| c == t.zero_class).unwrap_or(0),
    };
    let required: Vec<usize> = (0..y.len()).collect();
    let sub_values = restricted.iter().map(|&c| values[c]).collect();
    classify(&sub, Ok(sub_values), &required, |p| y.points[p].clone(), pair)
}

fn pair_name<'a>(a: &'a PointedSSet, b: &'a PointedSSet) -> impl Fn((usize, usize)) -> String + 'a {
    move |(p, q)| format!("{}⊗{}", a.points[p], b.points[q])
}

/// `φ_α: S_α ⊗_{S_ε} S_{α⁻¹} → S_ε` and `ψ_α: S ⊗_{S_ε} S_α → S`, both `x⊗y ↦ xy`.
#[derive(Debug, Clone, Serialize)]
pub struct TensorMaps {
    pub alpha: String,
    pub phi: NuReport,
    pub psi: NuReport,
    pub common_local_units: bool,
}

impl TensorMaps {
    pub fn phi_surjective(&self) -> bool {
        self.phi.well_defined && self.phi.surjective
    }

    pub fn psi_surjective(&self) -> bool {
        self.psi.well_defined && self.psi.surjective
    }

    /// Both maps are bijective whenever `S` has common local units.
    pub fn bijective_under_common_units(&self) -> bool {
        !self.common_local_units || (self.phi.bijective() && self.psi.bijective())
    }
}

pub fn tensor_product_maps(gs: &FiniteGraded, alpha: &GroupElement) -> TensorMaps {
    let sg = &gs.sg;
    let group = &gs.group;
    let t_eps = identity_part(gs);
    let s_alpha = component_with_zero(gs, alpha);
    let s_alpha_inv = component_with_zero(gs, &group.inv(alpha));
    let name = |p: usize| sg.label(p).to_string();

    let left = right_regular(sg, &s_alpha, &t_eps);
    let right = left_regular_part(sg, &s_alpha_inv, &t_eps);
    let t = tensor(&left, &right, &t_eps);
    let phi = classify(&t, t.descend(|p, q| sg.m(s_alpha[p], s_alpha_inv[q])), &t_eps, name, pair_name(&left, &right));

    let all: Vec<usize> = (0..sg.order()).collect();
    let left = right_regular(sg, &all, &t_eps);
    let right = left_regular_part(sg, &s_alpha, &t_eps);
    let t = tensor(&left, &right, &t_eps);
    let psi = classify(&t, t.descend(|p, q| sg.m(p, s_alpha[q])), &all, name, pair_name(&left, &right));

    let common_local_units = local_units_report(sg, 0).has_common_local_units;
    TensorMaps { alpha: alpha.to_string(), phi, psi, common_local_units }
}
