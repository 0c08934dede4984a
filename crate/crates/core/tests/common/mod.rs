//! Independent oracles shared by the integration suites.
//!
//! Root systems are rebuilt here from their classical Euclidean models
//! (coordinates doubled so every vector is integral), with no use of the
//! crate's Cartan data or root-string generator. Subsystem types are
//! identified by connected components of the non-orthogonality graph and
//! a (rank, root count, long root count) signature.

#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet};

use quatforms_core::classify::{analyze_all, ClassifyOptions};
use quatforms_core::complexform::ComplexFormAnalysis;
use quatforms_core::involution::{centralizer, convert_to_coweight};
use quatforms_core::{
    Basis, CartanType, Family, Root, RootSystem, SimpleType, Subsystem, ToralElement,
};

pub type Vector = Vec<i64>;
pub type Coeffs = Vec<i32>;

/// Every type the suites cover: classical ranks up to 10 and the exceptionals.
pub fn supported_types() -> Vec<SimpleType> {
    SimpleType::all_up_to(10)
}

pub fn graded_types() -> Vec<SimpleType> {
    supported_types().into_iter().filter(|t| t.rank() >= 2).collect()
}

fn unit(dim: usize, i: usize, k: i64) -> Vector {
    let mut v = vec![0; dim];
    v[i] = k;
    v
}

fn add(a: &[i64], b: &[i64]) -> Vector {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

fn scale(a: &[i64], k: i64) -> Vector {
    a.iter().map(|x| x * k).collect()
}

pub fn dot(a: &[i64], b: &[i64]) -> i64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// A root system as explicit vectors with a chosen base (Bourbaki order).
#[derive(Debug, Clone)]
pub struct Model {
    pub ty: SimpleType,
    pub simple: Vec<Vector>,
    pub roots: Vec<Vector>,
}

/// `±e_i ± e_j` for all `i < j`, in doubled coordinates.
fn pm_pairs(dim: usize) -> Vec<Vector> {
    let mut out = Vec::new();
    for i in 0..dim {
        for j in i + 1..dim {
            for (si, sj) in [(1, 1), (1, -1), (-1, 1), (-1, -1)] {
                out.push(add(&unit(dim, i, 2 * si), &unit(dim, j, 2 * sj)));
            }
        }
    }
    out
}

fn e8_model() -> (Vec<Vector>, Vec<Vector>) {
    let mut roots = pm_pairs(8);
    for mask in 0u32..256 {
        if mask.count_ones() % 2 == 0 {
            roots.push((0..8).map(|i| if mask >> i & 1 == 1 { -1 } else { 1 }).collect());
        }
    }
    let mut simple = vec![vec![1, -1, -1, -1, -1, -1, -1, 1]];
    simple.push(add(&unit(8, 0, 2), &unit(8, 1, 2)));
    for i in 0..6 {
        simple.push(add(&unit(8, i + 1, 2), &unit(8, i, -2)));
    }
    (simple, roots)
}

pub fn model(ty: SimpleType) -> Model {
    let n = ty.rank();
    let diff = |dim, i, j| add(&unit(dim, i, 2), &unit(dim, j, -2));
    let (simple, roots) = match ty.family() {
        Family::A => {
            let d = n + 1;
            let roots = (0..d)
                .flat_map(|i| (0..d).filter(move |&j| j != i).map(move |j| (i, j)))
                .map(|(i, j)| diff(d, i, j))
                .collect();
            ((0..n).map(|i| diff(d, i, i + 1)).collect(), roots)
        }
        Family::B | Family::C | Family::D => {
            let mut roots = pm_pairs(n);
            let short = match ty.family() {
                Family::B => 2,
                Family::C => 4,
                _ => 0,
            };
            if short != 0 {
                for i in 0..n {
                    roots.push(unit(n, i, short));
                    roots.push(unit(n, i, -short));
                }
            }
            let mut simple: Vec<Vector> = (0..n - 1).map(|i| diff(n, i, i + 1)).collect();
            simple.push(match ty.family() {
                Family::D => add(&unit(n, n - 2, 2), &unit(n, n - 1, 2)),
                _ => unit(n, n - 1, short),
            });
            (simple, roots)
        }
        Family::G => {
            let mut roots = Vec::new();
            for i in 0..3 {
                for j in 0..3 {
                    if i != j {
                        roots.push(diff(3, i, j));
                    }
                }
                let long: Vector = (0..3).map(|k| if k == i { 4 } else { -2 }).collect();
                roots.push(scale(&long, -1));
                roots.push(long);
            }
            let simple = vec![diff(3, 0, 1), vec![-4, 2, 2]];
            (simple, roots)
        }
        Family::F => {
            let mut roots = pm_pairs(4);
            for i in 0..4 {
                roots.push(unit(4, i, 2));
                roots.push(unit(4, i, -2));
            }
            for mask in 0u32..16 {
                roots.push((0..4).map(|i| if mask >> i & 1 == 1 { -1 } else { 1 }).collect());
            }
            let simple = vec![diff(4, 1, 2), diff(4, 2, 3), unit(4, 3, 2), vec![1, -1, -1, -1]];
            (simple, roots)
        }
        Family::E => {
            let (simple8, roots8) = e8_model();
            let full = Model {
                ty,
                simple: simple8.clone(),
                roots: Vec::new(),
            };
            let roots = roots8
                .into_iter()
                .filter(|r| full.coords(r).iter().skip(n).all(|&c| c == 0))
                .collect();
            (simple8[..n].to_vec(), roots)
        }
    };
    Model { ty, simple, roots }
}

impl Model {
    pub fn rank(&self) -> usize {
        self.simple.len()
    }

    pub fn cartan(&self) -> Vec<Vec<i32>> {
        let s = &self.simple;
        (0..s.len())
            .map(|i| {
                (0..s.len())
                    .map(|j| (2 * dot(&s[i], &s[j]) / dot(&s[j], &s[j])) as i32)
                    .collect()
            })
            .collect()
    }

    pub fn expand(&self, c: &[i32]) -> Vector {
        let dim = self.simple[0].len();
        c.iter()
            .zip(&self.simple)
            .fold(vec![0; dim], |acc, (&k, a)| add(&acc, &scale(a, k as i64)))
    }

    /// Coefficients over the base; panics unless the expansion is exact.
    pub fn coords(&self, v: &[i64]) -> Coeffs {
        let n = self.simple.len();
        let mut m: Vec<Vec<f64>> = (0..n)
            .map(|i| {
                let mut row: Vec<f64> =
                    (0..n).map(|j| dot(&self.simple[i], &self.simple[j]) as f64).collect();
                row.push(dot(&self.simple[i], v) as f64);
                row
            })
            .collect();
        for col in 0..n {
            let p = (col..n)
                .max_by(|&a, &b| m[a][col].abs().total_cmp(&m[b][col].abs()))
                .unwrap();
            m.swap(col, p);
            for r in 0..n {
                if r != col {
                    let f = m[r][col] / m[col][col];
                    for k in col..=n {
                        m[r][k] -= f * m[col][k];
                    }
                }
            }
        }
        let c: Coeffs = (0..n).map(|i| (m[i][n] / m[i][i]).round() as i32).collect();
        assert_eq!(self.expand(&c), v, "{v:?} is not in the lattice of the base");
        c
    }

    pub fn root_coords(&self) -> BTreeSet<Coeffs> {
        self.roots.iter().map(|r| self.coords(r)).collect()
    }

    pub fn inner(&self, a: &[i32], b: &[i32]) -> i64 {
        dot(&self.expand(a), &self.expand(b))
    }

    pub fn long_norm(&self) -> i64 {
        self.simple.iter().map(|s| dot(s, s)).max().unwrap()
    }

    /// Highest root: the unique root of maximal height.
    pub fn highest(&self) -> Coeffs {
        let all = self.root_coords();
        let h = all.iter().map(|c| c.iter().sum::<i32>()).max().unwrap();
        let top: Vec<&Coeffs> = all.iter().filter(|c| c.iter().sum::<i32>() == h).collect();
        assert_eq!(top.len(), 1, "{}: several roots of maximal height", self.ty);
        top[0].clone()
    }
}

/// Orbit of the simple roots under the simple reflections of `cartan`.
pub fn reflection_orbit(cartan: &[Vec<i32>]) -> BTreeSet<Coeffs> {
    let n = cartan.len();
    let mut seen: BTreeSet<Coeffs> = BTreeSet::new();
    let mut frontier: Vec<Coeffs> = (0..n)
        .map(|i| (0..n).map(|j| (i == j) as i32).collect())
        .collect();
    while let Some(v) = frontier.pop() {
        if !seen.insert(v.clone()) {
            continue;
        }
        for i in 0..n {
            let p: i32 = (0..n).map(|j| v[j] * cartan[j][i]).sum();
            let mut w = v.clone();
            w[i] -= p;
            if !seen.contains(&w) {
                frontier.push(w);
            }
        }
    }
    seen
}

fn span_rank(vs: &[Vector]) -> usize {
    let mut m: Vec<Vec<f64>> = vs.iter().map(|v| v.iter().map(|&x| x as f64).collect()).collect();
    let cols = m.first().map_or(0, |r| r.len());
    let mut rank = 0;
    for col in 0..cols {
        let Some(p) = (rank..m.len()).find(|&r| m[r][col].abs() > 1e-9) else { continue };
        m.swap(rank, p);
        for r in 0..m.len() {
            if r != rank {
                let f = m[r][col] / m[rank][col];
                for k in col..cols {
                    m[r][k] -= f * m[rank][k];
                }
            }
        }
        rank += 1;
    }
    rank
}

fn identify(rank: usize, count: usize, long: usize) -> (Family, usize) {
    let r = rank;
    match (r, count, long) {
        (6, 72, 72) => (Family::E, 6),
        (7, 126, 126) => (Family::E, 7),
        (8, 240, 240) => (Family::E, 8),
        (4, 48, 24) => (Family::F, 4),
        (2, 12, 6) => (Family::G, 2),
        _ if count == r * (r + 1) && long == count => (Family::A, r),
        _ if r >= 4 && count == 2 * r * (r - 1) && long == count => (Family::D, r),
        _ if r >= 2 && count == 2 * r * r && long == 2 * r * (r - 1) => (Family::B, r),
        _ if r >= 3 && count == 2 * r * r && long == 2 * r => (Family::C, r),
        _ => panic!("no irreducible root system of rank {r} with {count} roots ({long} long)"),
    }
}

/// Independent Cartan type of a symmetric closed root set, as sorted
/// `(family, rank)` labels plus torus rank.
pub fn oracle_type(m: &Model, roots: &[Coeffs]) -> (Vec<(Family, usize)>, usize) {
    let vecs: Vec<Vector> = roots.iter().map(|r| m.expand(r)).collect();
    let mut parent: Vec<usize> = (0..vecs.len()).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        let mut x = x;
        while p[x] != x {
            p[x] = p[p[x]];
            x = p[x];
        }
        x
    }
    for i in 0..vecs.len() {
        for j in i + 1..vecs.len() {
            if dot(&vecs[i], &vecs[j]) != 0 {
                let (a, b) = (find(&mut parent, i), find(&mut parent, j));
                parent[a] = b;
            }
        }
    }
    let mut comps: BTreeMap<usize, Vec<Vector>> = BTreeMap::new();
    for i in 0..vecs.len() {
        let root = find(&mut parent, i);
        comps.entry(root).or_default().push(vecs[i].clone());
    }
    let mut labels: Vec<(Family, usize)> = comps
        .values()
        .map(|c| {
            let top = c.iter().map(|v| dot(v, v)).max().unwrap();
            let long = c.iter().filter(|v| dot(v, v) == top).count();
            identify(span_rank(c), c.len(), long)
        })
        .collect();
    labels.sort();
    let ss: usize = labels.iter().map(|l| l.1).sum();
    (labels, m.rank() - ss)
}

pub fn core_labels(t: &CartanType) -> (Vec<(Family, usize)>, usize) {
    let mut labels: Vec<(Family, usize)> =
        t.components().iter().map(|c| (c.family(), c.rank())).collect();
    labels.sort();
    (labels, t.torus_rank())
}

pub fn coeffs(r: &Root) -> Coeffs {
    r.coeffs().to_vec()
}

pub fn sub_coeffs(s: &Subsystem<'_>) -> Vec<Coeffs> {
    s.roots().map(coeffs).collect()
}

/// `⟨α, t⟩ mod d` from the model's Cartan matrix.
pub fn oracle_pairing(cartan: &[Vec<i32>], t: &ToralElement, a: &[i32]) -> i64 {
    let n = a.len();
    let raw: i64 = match t.basis() {
        Basis::Coweight => (0..n).map(|i| a[i] as i64 * t.coords()[i]).sum(),
        Basis::Coroot => (0..n)
            .map(|i| t.coords()[i] * (0..n).map(|j| (a[j] * cartan[j][i]) as i64).sum::<i64>())
            .sum(),
    };
    raw.rem_euclid(t.denom() as i64)
}

pub fn oracle_centralizer(m: &Model, t: &ToralElement) -> BTreeSet<Coeffs> {
    centralizer_in(&m.root_coords(), &m.cartan(), t)
}

pub fn centralizer_in(
    roots: &BTreeSet<Coeffs>,
    cartan: &[Vec<i32>],
    t: &ToralElement,
) -> BTreeSet<Coeffs> {
    roots
        .iter()
        .filter(|a| oracle_pairing(cartan, t, a) == 0)
        .cloned()
        .collect()
}

pub fn oracle_grade(nodes: &[usize], a: &[i32]) -> i32 {
    nodes.iter().map(|&i| a[i]).sum()
}

fn check(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

// Property checks. Each returns the first violation found for one type.

/// Root-string generation, reflection orbit and the Euclidean model agree.
pub fn dual_oracle(ty: SimpleType) -> Result<(), String> {
    let rs = RootSystem::new(ty);
    let m = model(ty);
    let cartan = m.cartan();
    check(rs.cartan() == cartan.as_slice(), || {
        format!("{ty}: Cartan matrix {:?}, model gives {cartan:?}", rs.cartan())
    })?;
    let generated: BTreeSet<Coeffs> = rs.roots().map(|r| coeffs(&r)).collect();
    check(generated.len() == rs.num_roots(), || format!("{ty}: duplicate roots"))?;
    let orbit = reflection_orbit(&cartan);
    check(generated == orbit, || format!("{ty}: root strings and reflection orbit differ"))?;
    let euclid = m.root_coords();
    check(generated == euclid, || format!("{ty}: root strings and Euclidean model differ"))?;
    let expected_pos = euclid.iter().filter(|c| c.iter().all(|&x| x >= 0)).count();
    check(rs.positive_roots().len() == expected_pos, || format!("{ty}: positive root count"))?;
    Ok(())
}

/// Reflection closure, negation symmetry and the highest root.
pub fn root_axioms(ty: SimpleType) -> Result<(), String> {
    let rs = RootSystem::new(ty);
    let set: BTreeSet<Coeffs> = rs.roots().map(|r| coeffs(&r)).collect();
    let cartan = rs.cartan();
    let n = rs.rank();
    for a in &set {
        let neg: Coeffs = a.iter().map(|x| -x).collect();
        check(set.contains(&neg), || format!("{ty}: {a:?} has no negative"))?;
        for i in 0..n {
            let p: i32 = (0..n).map(|j| a[j] * cartan[j][i]).sum();
            let mut w = a.clone();
            w[i] -= p;
            check(set.contains(&w), || format!("{ty}: s_{i}({a:?}) missing"))?;
        }
    }
    let maximal: Vec<&Coeffs> = set
        .iter()
        .filter(|a| a.iter().all(|&x| x >= 0))
        .filter(|a| {
            (0..n).all(|i| {
                let mut w = (*a).clone();
                w[i] += 1;
                !set.contains(&w)
            })
        })
        .collect();
    check(maximal.len() == 1, || format!("{ty}: {} maximal positive roots", maximal.len()))?;
    let theta = model(ty).highest();
    check(maximal[0] == &theta && coeffs(rs.highest_root()) == theta, || {
        format!("{ty}: highest root {:?}, model gives {theta:?}", rs.highest_root())
    })
}

/// recognize of the full system returns the type; the oracle agrees.
pub fn round_trip(ty: SimpleType) -> Result<(), String> {
    let rs = RootSystem::new(ty);
    let full = Subsystem::full(&rs);
    let got = full.recognize().map_err(|e| format!("{ty}: {e}"))?;
    let want = CartanType::new([ty], 0);
    check(got == want, || format!("{ty}: recognized as {got}"))?;
    let oracle = oracle_type(&model(ty), &sub_coeffs(&full));
    check(oracle == core_labels(&want), || format!("{ty}: oracle identifies {oracle:?}"))
}

/// The only grade-2 positive root is θ, and grades equal `⟨α, θ∨⟩`.
pub fn grading(ty: SimpleType) -> Result<(), String> {
    let rs = RootSystem::new(ty);
    let gd = rs.quaternionic_decomposition().map_err(|e| format!("{ty}: {e}"))?;
    let m = model(ty);
    let theta = m.highest();
    let tv = m.expand(&theta);
    let tt = dot(&tv, &tv);
    let grade2: Vec<Coeffs> = rs
        .positive_roots()
        .iter()
        .map(coeffs)
        .filter(|a| oracle_grade(&gd.nodes, a) == 2)
        .collect();
    check(grade2 == [theta.clone()], || format!("{ty}: grade-2 roots {grade2:?}"))?;
    for a in rs.positive_roots() {
        let c = coeffs(a);
        let g = gd.grade(a);
        check(g == oracle_grade(&gd.nodes, &c), || format!("{ty}: grade of {a}"))?;
        let pair = 2 * dot(&m.expand(&c), &tv);
        check(pair % tt == 0, || format!("{ty}: non-integral ⟨{a}, θ∨⟩"))?;
        let pair = pair / tt;
        check(pair == g as i64, || format!("{ty}: grade({a}) = {g}, ⟨α, θ∨⟩ = {pair}"))?;
    }
    let m_count = rs.positive_roots().iter().filter(|a| gd.grade(a) == 1).count();
    check(gd.m_pos.len() == m_count && m_count % 2 == 0, || format!("{ty}: odd m count"))
}

fn coroot_grid(rank: usize) -> Vec<ToralElement> {
    let mut out = Vec::new();
    if rank <= 8 {
        for mask in 0u32..1 << rank {
            let c = (0..rank).map(|i| (mask >> i & 1) as i64).collect();
            out.push(ToralElement::new(c, 2, Basis::Coroot).unwrap());
        }
    } else {
        for i in 0..rank {
            for j in i..rank {
                let mut c = vec![0; rank];
                c[i] += 1;
                c[j] += 1;
                out.push(ToralElement::new(c, 2, Basis::Coroot).unwrap());
            }
        }
    }
    for d in [3, 4, 5] {
        for i in 0..rank {
            let mut c = vec![0; rank];
            c[i] = 1;
            out.push(ToralElement::new(c, d, Basis::Coroot).unwrap());
        }
        let c = (0..rank as i64).collect();
        out.push(ToralElement::new(c, d, Basis::Coroot).unwrap());
    }
    out
}

/// Centralizers agree across bases and with the oracle pairing; their
/// ranks add up.
pub fn basis_change(ty: SimpleType) -> Result<(), String> {
    let rs = RootSystem::new(ty);
    let m = model(ty);
    let (all, cartan) = (m.root_coords(), m.cartan());
    for t in coroot_grid(ty.rank()) {
        let l = centralizer(&rs, &t).map_err(|e| format!("{ty} {t}: {e}"))?;
        let w = convert_to_coweight(&rs, &t).map_err(|e| format!("{ty} {t}: {e}"))?;
        let lw = centralizer(&rs, &w).map_err(|e| format!("{ty} {w}: {e}"))?;
        let a: BTreeSet<Coeffs> = sub_coeffs(&l).into_iter().collect();
        let b: BTreeSet<Coeffs> = sub_coeffs(&lw).into_iter().collect();
        check(a == b, || format!("{ty}: centralizer of {t} differs from that of {w}"))?;
        let o = centralizer_in(&all, &cartan, &t);
        check(a == o, || format!("{ty}: centralizer of {t} differs from the oracle"))?;
        let lt = l.recognize().map_err(|e| format!("{ty} {t}: {e}"))?;
        check(lt.total_rank() == ty.rank(), || format!("{ty} {t}: L = {lt} has wrong rank"))?;
    }
    Ok(())
}

/// All inner involutions of `ty`, analyzed.
pub fn enumeration(ty: SimpleType) -> Vec<ComplexFormAnalysis> {
    let rs = RootSystem::new(ty);
    analyze_all(&rs, ClassifyOptions::default()).expect("enumeration succeeds")
}

/// Step 6, parity, disjoint cover, verdict and rank properties over the
/// full enumeration, with L and V of accepted forms re-identified by the
/// oracle.
pub fn form_properties(ty: SimpleType) -> Result<usize, String> {
    let rs = RootSystem::new(ty);
    let gd = rs.quaternionic_decomposition().map_err(|e| e.to_string())?;
    let m = model(ty);
    let theta = m.highest();
    let m_set: BTreeSet<Coeffs> = gd.m_pos.iter().map(coeffs).collect();
    let (all, cartan) = (m.root_coords(), m.cartan());
    let mut accepted = 0;
    for a in enumeration(ty) {
        let t = &a.sym;
        check(a.step6_count == 0, || format!("{ty} {t}: step6 = {}", a.step6_count))?;
        let l = centralizer_in(&all, &cartan, t);
        let s: BTreeSet<Coeffs> = a.s_pos.iter().map(coeffs).collect();
        let s_oracle: BTreeSet<Coeffs> = l
            .iter()
            .filter(|r| r.iter().all(|&x| x >= 0) && oracle_grade(&gd.nodes, r) == 1)
            .cloned()
            .collect();
        check(s == s_oracle, || format!("{ty} {t}: s differs from the oracle"))?;
        let rows: BTreeSet<Coeffs> = s
            .iter()
            .flat_map(|b| [b.clone(), theta.iter().zip(b).map(|(x, y)| x - y).collect()])
            .chain(m_set.iter().cloned())
            .collect();
        check(rows.len() == m_set.len(), || format!("{ty} {t}: oracle step 6 is nonzero"))?;
        check(a.circle_ok == !l.contains(&theta), || format!("{ty} {t}: circle flag"))?;
        check(a.l_type.total_rank() == ty.rank(), || format!("{ty} {t}: L rank"))?;
        check(a.v_type.total_rank() == ty.rank(), || format!("{ty} {t}: V rank"))?;
        let want = a.circle_ok && a.dim_s == a.dim_h;
        check(a.verdict.is_complex_form() == want, || format!("{ty} {t}: verdict"))?;
        if a.circle_ok {
            for b in &s {
                let d: Coeffs = theta.iter().zip(b).map(|(x, y)| x - y).collect();
                check(!l.contains(&d), || format!("{ty} {t}: θ − {b:?} lies in L"))?;
            }
        }
        if !a.verdict.is_complex_form() {
            continue;
        }
        accepted += 1;
        let mirror: BTreeSet<Coeffs> = s
            .iter()
            .map(|b| theta.iter().zip(b).map(|(x, y)| x - y).collect())
            .collect();
        check(s.is_disjoint(&mirror), || format!("{ty} {t}: s meets θ − s"))?;
        let union: BTreeSet<Coeffs> = s.union(&mirror).cloned().collect();
        check(union == m_set, || format!("{ty} {t}: s ⊔ (θ − s) ≠ m⁺"))?;
        check(a.disjoint_cover, || format!("{ty} {t}: disjoint_cover flag false"))?;

        let l_roots: Vec<Coeffs> = l.iter().cloned().collect();
        check(oracle_type(&m, &l_roots) == core_labels(&a.l_type), || {
            format!("{ty} {t}: L = {} disagrees with the oracle", a.l_type)
        })?;
        let v_roots: Vec<Coeffs> = l
            .iter()
            .filter(|r| oracle_grade(&gd.nodes, r).abs() != 1)
            .cloned()
            .collect();
        check(oracle_type(&m, &v_roots) == core_labels(&a.v_type), || {
            format!("{ty} {t}: V = {} disagrees with the oracle", a.v_type)
        })?;
    }
    Ok(accepted)
}
