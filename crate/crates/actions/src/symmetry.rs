// SPDX-License-Identifier: Apache-2.0

//! Partial symmetries of a graded set, the gradings of a finite semigroup,
//! and the graded Vagner–Preston and Cayley embeddings.

use std::collections::{BTreeMap, HashMap};

use grade_group::{GradeGroup, GroupElement};
use grading::fixtures::graded_partial_bijections;
use grading::{is_locally_strongly_graded, is_strongly_graded, Bounds, FiniteGraded, Verdict};
use semigroup_core::fixtures::symmetric_inverse_monoid;
use semigroup_core::{FiniteSemigroup, PartialBijection};
use serde::Serialize;

use crate::ActionError;

/// `I(X)`, `I^gr(X)` and `T^gr(X)` for a finite graded set `X`.
#[derive(Debug, Clone)]
pub struct PartialSymmetries {
    pub point_degrees: Vec<GroupElement>,
    pub i_x: FiniteSemigroup,
    pub i_gr: FiniteGraded,
    pub i_gr_maps: Vec<PartialBijection>,
    /// Pointed maps on `X ∪ {0}` (point `n` is `0`) with `ψ(X_β) ⊆ X_{αβ} ∪ {0}`.
    pub t_gr: FiniteGraded,
    pub t_gr_maps: Vec<Vec<usize>>,
    /// Generic verdict on `I^gr(X)`.
    pub strong: Verdict,
    pub locally_strong: Verdict,
    /// All `|X_α|` are equal.
    pub equal_components: bool,
    /// No `X_α` is empty.
    pub nonempty_components: bool,
}

impl PartialSymmetries {
    /// The component-size criteria agree with the generic verdicts.
    pub fn agrees(&self) -> bool {
        self.strong.is_holds() == self.equal_components && self.locally_strong.is_holds() == self.nonempty_components
    }
}

fn point_names(n: usize) -> Vec<String> {
    (0..n).map(|i| format!("x{i}")).collect()
}

pub fn partial_symmetry_build(
    point_degrees: &[GroupElement],
    group: &GradeGroup,
) -> Result<PartialSymmetries, ActionError> {
    if !group.is_finite() {
        return Err(ActionError::InfiniteGroup);
    }
    if let Some(d) = point_degrees.iter().find(|d| !group.contains(d)) {
        return Err(ActionError::InvalidAction(format!("degree {d} is not in {group}")));
    }
    let n = point_degrees.len();
    let names = point_names(n);
    let name_refs: Vec<&str> = names.iter().map(String::as_str).collect();
    let (i_x, _) = symmetric_inverse_monoid(n, &name_refs);
    let (i_gr, i_gr_maps) = graded_partial_bijections(point_degrees, group);
    let (t_gr, t_gr_maps) = graded_transformations(point_degrees, group);

    let sizes: Vec<usize> =
        group.enumerate(0).iter().map(|a| point_degrees.iter().filter(|d| *d == a).count()).collect();
    let bounds = Bounds::default();
    Ok(PartialSymmetries {
        point_degrees: point_degrees.to_vec(),
        strong: is_strongly_graded(&i_gr, bounds),
        locally_strong: is_locally_strongly_graded(&i_gr, bounds)?,
        equal_components: sizes.windows(2).all(|w| w[0] == w[1]),
        nonempty_components: sizes.iter().all(|&k| k > 0),
        i_x,
        i_gr,
        i_gr_maps,
        t_gr,
        t_gr_maps,
    })
}

/// Homogeneous pointed maps on `X ∪ {0}`; the constant map to `0` is the zero.
fn graded_transformations(point_degrees: &[GroupElement], group: &GradeGroup) -> (FiniteGraded, Vec<Vec<usize>>) {
    let n = point_degrees.len();
    let zero = n;
    let mut maps = Vec::new();
    let mut degrees = Vec::new();
    let mut digits = vec![0usize; n];
    loop {
        let mut map: Vec<usize> = digits.clone();
        map.push(zero);
        let mut alpha: Option<Option<GroupElement>> = Some(None);
        for x in 0..n {
            if map[x] == zero {
                continue;
            }
            let a = group.div(&point_degrees[map[x]], &point_degrees[x]);
            match &alpha {
                Some(None) => alpha = Some(Some(a)),
                Some(Some(b)) if *b != a => {
                    alpha = None;
                    break;
                }
                _ => {}
            }
        }
        if let Some(d) = alpha {
            maps.push(map);
            degrees.push(d);
        }
        if !advance(&mut digits, n + 1) {
            break;
        }
    }
    // Put the zero map first.
    let z = maps.iter().position(|m| m.iter().all(|&y| y == zero)).expect("constant zero map");
    maps.swap(0, z);
    degrees.swap(0, z);
    let names = point_names(n);
    let render = |m: &[usize]| {
        let images: Vec<&str> = m[..n].iter().map(|&y| if y == zero { "0" } else { names[y].as_str() }).collect();
        format!("[{}]", images.join(","))
    };
    let labels = maps.iter().map(|m| render(m)).collect();
    let index: HashMap<Vec<usize>, usize> = maps.iter().cloned().enumerate().map(|(i, m)| (m, i)).collect();
    let sg = FiniteSemigroup::from_fn(labels, 0, |a, b| {
        let composed: Vec<usize> = maps[b].iter().map(|&y| maps[a][y]).collect();
        index[&composed]
    })
    .expect("T^gr(X) is closed under composition");
    (FiniteGraded::new(sg, group.clone(), degrees).expect("homogeneous maps"), maps)
}

fn advance(digits: &mut [usize], base: usize) -> bool {
    for d in digits.iter_mut() {
        *d += 1;
        if *d < base {
            return true;
        }
        *d = 0;
    }
    false
}

/// Every grading `φ: S∖{0} → Γ` with `φ(st) = φ(s)φ(t)` whenever `st ≠ 0`.
/// Nonzero idempotents are pinned to `ε`; other values propagate along
/// products, and the remaining choices are made by backtracking.
pub fn grading_search(sg: &FiniteSemigroup, group: &GradeGroup) -> Result<Vec<FiniteGraded>, ActionError> {
    if !group.is_finite() {
        return Err(ActionError::InfiniteGroup);
    }
    let elems = group.enumerate(0);
    let n = sg.order();
    let zero = sg.zero_index();
    let mut init: Vec<Option<GroupElement>> = vec![None; n];
    for e in sg.idempotents() {
        if e != zero {
            init[e] = Some(group.identity());
        }
    }
    let mut out = Vec::new();
    let Some(start) = propagate(sg, group, init) else { return Ok(out) };
    let mut stack = vec![start];
    while let Some(partial) = stack.pop() {
        match (0..n).find(|&a| a != zero && partial[a].is_none()) {
            None => out.push(FiniteGraded::new(sg.clone(), group.clone(), partial)?),
            Some(a) => {
                for g in elems.iter().rev() {
                    let mut next = partial.clone();
                    next[a] = Some(g.clone());
                    if let Some(p) = propagate(sg, group, next) {
                        stack.push(p);
                    }
                }
            }
        }
    }
    Ok(out)
}

/// Closes a partial assignment under `φ(st) = φ(s)φ(t)`, also solving for
/// a missing factor; `None` on a contradiction.
fn propagate(
    sg: &FiniteSemigroup,
    group: &GradeGroup,
    mut phi: Vec<Option<GroupElement>>,
) -> Option<Vec<Option<GroupElement>>> {
    let zero = sg.zero_index();
    loop {
        let mut changed = false;
        for s in sg.nonzero() {
            for t in sg.nonzero() {
                let st = sg.m(s, t);
                if st == zero {
                    continue;
                }
                let (a, b, c) = (phi[s].clone(), phi[t].clone(), phi[st].clone());
                let mut set = |x: usize, v: GroupElement| -> bool {
                    match &phi[x] {
                        Some(w) => *w == v,
                        None => {
                            phi[x] = Some(v);
                            changed = true;
                            true
                        }
                    }
                };
                let ok = match (a, b, c) {
                    (Some(a), Some(b), _) => set(st, group.op(&a, &b)),
                    (Some(a), None, Some(c)) => set(t, group.op(&group.inv(&a), &c)),
                    (None, Some(b), Some(c)) => set(s, group.op(&c, &group.inv(&b))),
                    _ => true,
                };
                if !ok {
                    return None;
                }
            }
        }
        if !changed {
            return Some(phi);
        }
    }
}

/// A verified graded embedding into a semigroup of (partial) maps.
#[derive(Debug, Clone, Serialize)]
pub struct EmbeddingReport {
    pub kind: String,
    pub points: usize,
    pub injective: bool,
    pub homomorphism: bool,
    /// `θ_s` lies in the component of degree `deg(s)`.
    pub graded: bool,
    pub maps: BTreeMap<String, String>,
    pub verdict: Verdict,
}

fn embedding_verdict(kind: &str, injective: bool, homomorphism: bool, graded: bool, witness: Vec<String>) -> Verdict {
    if injective && homomorphism && graded {
        Verdict::holds(format!("{kind}: graded injective homomorphism, checked exhaustively"))
    } else {
        let what: Vec<&str> = [(injective, "injective"), (homomorphism, "homomorphism"), (graded, "graded")]
            .iter()
            .filter(|(ok, _)| !ok)
            .map(|(_, w)| *w)
            .collect();
        Verdict::fails(format!("{kind} fails: {}", what.join(", ")), witness)
    }
}

/// The maps `θ_s` on the points `S∖{0}`, numbered in table order.
pub fn vagner_preston_maps(sg: &FiniteSemigroup) -> Result<Vec<PartialBijection>, ActionError> {
    if !sg.is_inverse() {
        return Err(ActionError::NotInverse);
    }
    let points: Vec<usize> = sg.nonzero().collect();
    let pos = |a: usize| points.iter().position(|&p| p == a);
    Ok((0..sg.order())
        .map(|s| {
            let si = sg.inv(s).expect("inverse semigroup");
            let dom_idem = sg.m(si, s);
            PartialBijection::new(
                points.iter().map(|&x| if sg.m(dom_idem, x) == x { pos(sg.m(s, x)) } else { None }).collect(),
            )
        })
        .collect())
}

/// `ψ: S → I^gr(S∖{0})`, `s ↦ θ_s` with `θ_s: s⁻¹sS∖{0} → ss⁻¹S∖{0}`, `x ↦ sx`.
pub fn vagner_preston_graded(gs: &FiniteGraded) -> Result<EmbeddingReport, ActionError> {
    let sg = &gs.sg;
    if !sg.is_inverse() {
        return Err(ActionError::NotInverse);
    }
    let zero = sg.zero_index();
    let points: Vec<usize> = sg.nonzero().collect();
    let theta = vagner_preston_maps(sg)?;
    let mut witness = Vec::new();
    let injective = distinct(&theta, &mut witness, |s| sg.label(s).to_string());
    let mut homomorphism = theta[zero].is_empty();
    'outer: for s in 0..sg.order() {
        for t in 0..sg.order() {
            if theta[s].compose(&theta[t]) != theta[sg.m(s, t)] {
                homomorphism = false;
                witness = vec![sg.label(s).into(), sg.label(t).into()];
                break 'outer;
            }
        }
    }
    let group = &gs.group;
    let graded = sg.nonzero().all(|s| {
        let d = gs.deg(s).expect("nonzero");
        let ok = theta[s].domain().into_iter().all(|i| {
            let j = theta[s].apply(i).expect("domain");
            gs.deg(points[j]) == Some(&group.op(d, gs.deg(points[i]).expect("nonzero")))
        });
        if !ok && witness.is_empty() {
            witness.push(sg.label(s).into());
        }
        ok
    });
    let names: Vec<String> = points.iter().map(|&p| sg.label(p).to_string()).collect();
    Ok(EmbeddingReport {
        kind: "Vagner–Preston".into(),
        points: points.len(),
        injective,
        homomorphism,
        graded,
        maps: (0..sg.order()).map(|s| (sg.label(s).to_string(), theta[s].render(&names))).collect(),
        verdict: embedding_verdict("Vagner–Preston", injective, homomorphism, graded, witness),
    })
}

/// `ψ: S → T^gr(S¹)`, `s ↦ θ_s` with `θ_s(x) = sx` and `deg(1) = ε`.
pub fn cayley_graded_embedding(gs: &FiniteGraded) -> EmbeddingReport {
    let sg = &gs.sg;
    let n = sg.order();
    let one = n;
    let act = |s: usize, x: usize| if x == one { s } else { sg.m(s, x) };
    let theta: Vec<Vec<usize>> = (0..n).map(|s| (0..=n).map(|x| act(s, x)).collect()).collect();
    let mut witness = Vec::new();
    let injective = distinct(&theta, &mut witness, |s| sg.label(s).to_string());
    let mut homomorphism = true;
    'outer: for s in 0..n {
        for t in 0..n {
            let composed: Vec<usize> = theta[t].iter().map(|&y| theta[s][y]).collect();
            if composed != theta[sg.m(s, t)] {
                homomorphism = false;
                witness = vec![sg.label(s).into(), sg.label(t).into()];
                break 'outer;
            }
        }
    }
    let group = &gs.group;
    let eps = group.identity();
    let deg_point = |x: usize| if x == one { Some(&eps) } else { gs.deg(x) };
    let zero = sg.zero_index();
    let graded = sg.nonzero().all(|s| {
        let d = gs.deg(s).expect("nonzero");
        let ok = (0..=n).filter(|&x| x != zero).all(|x| {
            let y = theta[s][x];
            y == zero || gs.deg(y) == Some(&group.op(d, deg_point(x).expect("nonzero point")))
        });
        if !ok && witness.is_empty() {
            witness.push(sg.label(s).into());
        }
        ok
    });
    let label = |x: usize| if x == one { "1ₓ".to_string() } else { sg.label(x).to_string() };
    let maps = (0..n)
        .map(|s| {
            let images: Vec<String> = theta[s].iter().map(|&y| label(y)).collect();
            (sg.label(s).to_string(), format!("[{}]", images.join(",")))
        })
        .collect();
    EmbeddingReport {
        kind: "Cayley".into(),
        points: n + 1,
        injective,
        homomorphism,
        graded,
        maps,
        verdict: embedding_verdict("Cayley", injective, homomorphism, graded, witness),
    }
}

fn distinct<T: Eq + std::hash::Hash>(maps: &[T], witness: &mut Vec<String>, label: impl Fn(usize) -> String) -> bool {
    let mut seen: HashMap<&T, usize> = HashMap::new();
    for (s, m) in maps.iter().enumerate() {
        if let Some(&t) = seen.get(m) {
            *witness = vec![label(t), label(s)];
            return false;
        }
        seen.insert(m, s);
    }
    true
}
