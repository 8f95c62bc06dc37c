//! Affine Cartan data of Γ ⊂ SU(2), finite roots, and the toroidal and affine
//! relations realized by X_n(γ) and a_n(γ) on F_Γ.

use std::cell::RefCell;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::Arc;

use num_traits::{Signed, ToPrimitive, Zero};
use rayon::prelude::*;

use crate::error::Error;
use crate::fock::HeisOp;
use crate::forms::{mckay_eigencheck, natural_mckay_xi, radical_check, EigenReport, RadicalReport, XiForm};
use crate::group::GroupData;
use crate::lattice::{apply_heis_fock, FockVec, Half, LatticeVec};
use crate::partitions::{enumerate_partfn, PartFn};
use crate::scalar::{Cyclo, Rational};
use crate::vertex::VertexAlgebra;

/// Affine Dynkin type X_r^{(1)}.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct AdeLabel {
    pub kind: char,
    pub rank: usize,
}

impl AdeLabel {
    /// |Δ| of the finite root system.
    pub fn root_count(&self) -> usize {
        let r = self.rank;
        match (self.kind, r) {
            ('A', _) => r * (r + 1),
            ('D', _) => 2 * r * (r - 1),
            ('E', 6) => 72,
            ('E', 7) => 126,
            ('E', 8) => 240,
            _ => unreachable!("not an ADE label"),
        }
    }
}

impl fmt::Display for AdeLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "affine {}{}", self.kind, self.rank)
    }
}

/// Names the affine diagram of a generalized Cartan matrix.
pub fn classify_affine(cartan: &[Vec<i64>]) -> Result<AdeLabel, Error> {
    let n = cartan.len();
    if n < 2 || cartan.iter().any(|row| row.len() != n) {
        return Err(Error::NoAdeMatch);
    }
    for i in 0..n {
        if cartan[i][i] != 2 {
            return Err(Error::NoAdeMatch);
        }
        for j in 0..n {
            if i != j && (cartan[i][j] != cartan[j][i] || cartan[i][j] > 0) {
                return Err(Error::NoAdeMatch);
            }
        }
    }
    if n == 2 {
        return if cartan[0][1] == -2 { Ok(AdeLabel { kind: 'A', rank: 1 }) } else { Err(Error::NoAdeMatch) };
    }
    if cartan.iter().enumerate().any(|(i, row)| row.iter().enumerate().any(|(j, &a)| i != j && a < -1)) {
        return Err(Error::NoAdeMatch);
    }
    let adj: Vec<Vec<usize>> = (0..n).map(|i| (0..n).filter(|&j| j != i && cartan[i][j] == -1).collect()).collect();
    // connectivity
    let mut seen = vec![false; n];
    let mut stack = vec![0];
    seen[0] = true;
    while let Some(i) = stack.pop() {
        for &j in &adj[i] {
            if !seen[j] {
                seen[j] = true;
                stack.push(j);
            }
        }
    }
    if seen.contains(&false) {
        return Err(Error::NoAdeMatch);
    }
    let edges: usize = adj.iter().map(|a| a.len()).sum::<usize>() / 2;
    let deg: Vec<usize> = adj.iter().map(|a| a.len()).collect();
    if edges == n {
        return if deg.iter().all(|&d| d == 2) { Ok(AdeLabel { kind: 'A', rank: n - 1 }) } else { Err(Error::NoAdeMatch) };
    }
    if edges != n - 1 {
        return Err(Error::NoAdeMatch);
    }
    let branch: Vec<usize> = (0..n).filter(|&i| deg[i] >= 3).collect();
    match branch.as_slice() {
        [b] if deg[*b] == 4 => {
            if n == 5 {
                Ok(AdeLabel { kind: 'D', rank: 4 })
            } else {
                Err(Error::NoAdeMatch)
            }
        }
        [b] if deg[*b] == 3 => {
            let mut arms: Vec<usize> = adj[*b].iter().map(|&s| arm_length(&adj, *b, s)).collect();
            arms.sort();
            match arms.as_slice() {
                [2, 2, 2] => Ok(AdeLabel { kind: 'E', rank: 6 }),
                [1, 3, 3] => Ok(AdeLabel { kind: 'E', rank: 7 }),
                [1, 2, 5] => Ok(AdeLabel { kind: 'E', rank: 8 }),
                _ => Err(Error::NoAdeMatch),
            }
        }
        [b1, b2] if deg[*b1] == 3 && deg[*b2] == 3 => {
            let leaves = |b: usize| adj[b].iter().filter(|&&s| deg[s] == 1).count();
            if leaves(*b1) == 2 && leaves(*b2) == 2 {
                Ok(AdeLabel { kind: 'D', rank: n - 1 })
            } else {
                Err(Error::NoAdeMatch)
            }
        }
        _ => Err(Error::NoAdeMatch),
    }
}

/// Number of nodes on the path leaving `from` through `start`.
fn arm_length(adj: &[Vec<usize>], from: usize, start: usize) -> usize {
    let (mut prev, mut cur, mut len) = (from, start, 1);
    loop {
        let next: Vec<usize> = adj[cur].iter().copied().filter(|&x| x != prev).collect();
        match next.as_slice() {
            [nx] => {
                prev = cur;
                cur = *nx;
                len += 1;
            }
            _ => return len,
        }
    }
}

/// McKay data for one finite subgroup of SU(2).
#[derive(Clone, Debug)]
pub struct AffineData {
    pub group: Arc<GroupData>,
    pub xi: XiForm,
    pub cartan: Vec<Vec<i64>>,
    /// δ = (d_0, …, d_r), the regular character in irreducible coordinates.
    pub delta: LatticeVec,
    /// (i, j, −a_ij) for i < j with a_ij ≠ 0.
    pub diagram: Vec<(usize, usize, i64)>,
    pub label: AdeLabel,
    pub eigen: EigenReport,
    pub radical: RadicalReport,
    pub roots: Vec<LatticeVec>,
}

pub fn build_affine(spec: &str) -> Result<AffineData, Error> {
    let group = Arc::new(GroupData::build(spec)?);
    let xi = natural_mckay_xi(&group)?;
    let cartan = xi.integer_matrix().ok_or_else(|| Error::Corrupt("A is not integral".into()))?;
    let eigen = mckay_eigencheck(&xi);
    if !eigen.all_pass() {
        return Err(Error::Corrupt("AE = ED fails".into()));
    }
    let radical = radical_check(&xi);
    if !radical.pass() {
        return Err(Error::Corrupt(format!("radical check fails: kernel dimension {}", radical.kernel_dim)));
    }
    let label = classify_affine(&cartan)?;
    let n = cartan.len();
    let diagram = (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .filter(|&(i, j)| cartan[i][j] != 0)
        .map(|(i, j)| (i, j, -cartan[i][j]))
        .collect();
    let delta = LatticeVec(radical.delta.clone());
    let roots = finite_roots(&cartan)?;
    if roots.len() != label.root_count() {
        return Err(Error::Corrupt(format!("{} roots found, {label} has {}", roots.len(), label.root_count())));
    }
    Ok(AffineData { group, xi, cartan, delta, diagram, label, eigen, radical, roots })
}

/// All α in the span of γ_1..γ_r with ⟨α,α⟩ = 2, padded with α_0 = 0.
pub fn root_enumeration(ad: &AffineData) -> Vec<LatticeVec> {
    ad.roots.clone()
}

fn finite_roots(cartan: &[Vec<i64>]) -> Result<Vec<LatticeVec>, Error> {
    let gram: Vec<Vec<i64>> = cartan[1..].iter().map(|row| row[1..].to_vec()).collect();
    let vecs = short_vectors(&gram, 2)?;
    Ok(vecs
        .into_iter()
        .filter(|(_, nn)| *nn == 2)
        .map(|(x, _)| {
            let mut full = vec![0];
            full.extend(x);
            LatticeVec(full)
        })
        .collect())
}

/// Every nonzero x with xᵀGx ≤ bound for positive-definite integral G, with
/// its norm; exact Fincke–Pohst search. Err if G is not positive definite.
pub fn short_vectors(gram: &[Vec<i64>], bound: i64) -> Result<Vec<(Vec<i64>, i64)>, Error> {
    let r = gram.len();
    // Q(x) = Σ_i q_ii (x_i + Σ_{j>i} q_ij x_j)²
    let mut q = vec![vec![Rational::zero(); r]; r];
    for i in 0..r {
        for j in i..r {
            let mut s = Rational::from_integer(gram[i][j].into());
            for k in 0..i {
                s -= &q[k][k] * &q[k][i] * &q[k][j];
            }
            if i == j {
                if !s.is_positive() {
                    return Err(Error::Corrupt("finite Cartan block is not positive definite".into()));
                }
                q[i][i] = s;
            } else {
                q[i][j] = s / &q[i][i];
            }
        }
    }
    let mut out = Vec::new();
    let mut x = vec![0i64; r];
    search(&q, r, &Rational::from_integer(bound.into()), &mut x, &mut out, gram);
    out.retain(|(v, _)| v.iter().any(|&c| c != 0));
    out.sort();
    Ok(out)
}

fn search(q: &[Vec<Rational>], level: usize, budget: &Rational, x: &mut Vec<i64>, out: &mut Vec<(Vec<i64>, i64)>, gram: &[Vec<i64>]) {
    if level == 0 {
        let r = x.len();
        let nn: i64 = (0..r).map(|i| (0..r).map(|j| x[i] * gram[i][j] * x[j]).sum::<i64>()).sum();
        out.push((x.clone(), nn));
        return;
    }
    let i = level - 1;
    let r = x.len();
    let center: Rational = -(i + 1..r).map(|j| &q[i][j] * Rational::from_integer(x[j].into())).sum::<Rational>();
    let t = budget / &q[i][i];
    let rad = t.to_f64().unwrap_or(0.0).sqrt() + 1.0;
    let c = center.to_f64().unwrap_or(0.0);
    let lo = (c - rad).floor() as i64;
    let hi = (c + rad).ceil() as i64;
    for v in lo..=hi {
        let d = Rational::from_integer(v.into()) - &center;
        let used = &q[i][i] * &d * &d;
        if used > *budget {
            continue;
        }
        x[i] = v;
        search(q, i, &(budget - used), x, out, gram);
    }
    x[i] = 0;
}

/// Operator atoms: a_n(γ) with γ in lattice coordinates, or X_n(γ).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Atom {
    Heis(LatticeVec, i64),
    Vertex(LatticeVec, i64),
}

impl fmt::Display for Atom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Atom::Heis(g, n) => write!(f, "a_{n}{g}"),
            Atom::Vertex(g, n) => write!(f, "X_{n}{g}"),
        }
    }
}

/// Σ c · (word applied right to left) = 0, an empty word being the identity.
#[derive(Clone, Debug)]
pub struct RelationInstance {
    pub family: &'static str,
    pub name: String,
    pub terms: Vec<(i64, Vec<Atom>)>,
}

fn commutator(x: &[Atom], y: &[Atom]) -> Vec<(i64, Vec<Atom>)> {
    vec![(1, [x, y].concat()), (-1, [y, x].concat())]
}

/// Memoized atom action on basis vectors, extended linearly.
struct Evaluator<'a> {
    va: &'a VertexAlgebra,
    cache: RefCell<HashMap<(Atom, PartFn, LatticeVec), FockVec>>,
}

impl<'a> Evaluator<'a> {
    fn new(va: &'a VertexAlgebra) -> Self {
        Evaluator { va, cache: RefCell::new(HashMap::new()) }
    }

    fn apply_basis(&self, atom: &Atom, rho: &PartFn, alpha: &LatticeVec) -> FockVec {
        let key = (atom.clone(), rho.clone(), alpha.clone());
        if let Some(r) = self.cache.borrow().get(&key) {
            return r.clone();
        }
        let v = &FockVec::basis(rho.clone(), alpha.clone());
        let r = match atom {
            Atom::Heis(g, n) => {
                let op = HeisOp::new(*n, g.coords_cyclo());
                apply_heis_fock(&op, v, self.va.xi_form(), self.va.lattice())
            }
            Atom::Vertex(g, n) => self.va.vertex_component(g, Half::int(*n), v).expect("integral mode"),
        };
        self.cache.borrow_mut().insert(key, r.clone());
        r
    }

    fn apply(&self, atom: &Atom, v: &FockVec) -> FockVec {
        let mut out = FockVec::zero(v.width());
        for (alpha, s) in v.sectors() {
            for (rho, c) in s.terms() {
                out = out.add(&self.apply_basis(atom, rho, alpha).scale(c));
            }
        }
        out
    }

    fn word(&self, w: &[Atom], v: &FockVec) -> FockVec {
        w.iter().rev().fold(v.clone(), |acc, a| if acc.is_zero() { acc } else { self.apply(a, &acc) })
    }

    fn eval(&self, rel: &RelationInstance, v: &FockVec) -> FockVec {
        let mut out = FockVec::zero(v.width());
        for (c, w) in &rel.terms {
            out = out.add(&self.word(w, v).scale(&Cyclo::from_int(*c)));
        }
        out
    }
}

#[derive(Clone, Debug, Default)]
pub struct RelationReport {
    /// family → (instances, failures)
    pub families: BTreeMap<String, (usize, usize)>,
    pub vectors: usize,
    /// First failures, for diagnostics.
    pub failures: Vec<String>,
}

impl RelationReport {
    pub fn pass(&self) -> bool {
        self.families.values().all(|&(_, f)| f == 0)
    }

    pub fn instances(&self) -> usize {
        self.families.values().map(|&(n, _)| n).sum()
    }

    pub fn failure_count(&self) -> usize {
        self.families.values().map(|&(_, f)| f).sum()
    }
}

/// Checks every relation on every test vector in parallel.
pub fn check_relations(va: &VertexAlgebra, relations: &[RelationInstance], basis: &[FockVec]) -> RelationReport {
    let per_vector: Vec<Vec<(usize, bool)>> = basis
        .par_iter()
        .map_init(
            || Evaluator::new(va),
            |ev, v| relations.iter().enumerate().map(|(k, rel)| (k, ev.eval(rel, v).is_zero())).collect(),
        )
        .collect();
    let mut report = RelationReport { vectors: basis.len(), ..Default::default() };
    for (vi, results) in per_vector.iter().enumerate() {
        for &(k, ok) in results {
            let e = report.families.entry(relations[k].family.to_string()).or_insert((0, 0));
            e.0 += 1;
            if !ok {
                e.1 += 1;
                if report.failures.len() < 20 {
                    report.failures.push(format!("{} on {}", relations[k].name, basis[vi]));
                }
            }
        }
    }
    report
}

/// Instances of the toroidal presentation with h_i(n) ↦ a_n(γ_i),
/// x_n(±α_i) ↦ X_n(±γ_i), C ↦ 1, for |n|, |m| ≤ `modes`.
pub fn toroidal_relations(ad: &AffineData, modes: i64) -> Vec<RelationInstance> {
    let width = ad.cartan.len();
    let a = &ad.cartan;
    let eps = crate::lattice::Cocycle::standard(&crate::lattice::Lattice::new(a.clone()));
    let g = |i: usize| LatticeVec::basis(width, i);
    let range: Vec<i64> = (-modes..=modes).collect();
    let mut out = Vec::new();
    for i in 0..width {
        for j in 0..width {
            for &n in &range {
                for &m in &range {
                    let h_i = Atom::Heis(g(i), n);
                    // [h_i(n), h_j(m)] = n a_ij δ_{n,−m} C
                    let mut terms = commutator(std::slice::from_ref(&h_i), &[Atom::Heis(g(j), m)]);
                    if n == -m && n * a[i][j] != 0 {
                        terms.push((-n * a[i][j], vec![]));
                    }
                    out.push(RelationInstance { family: "[h,h]", name: format!("[h_{i}({n}), h_{j}({m})]"), terms });
                    // [h_i(n), x_m(±α_j)] = ±a_ij x_{n+m}(±α_j)
                    for s in [1, -1] {
                        let x = Atom::Vertex(g(j).scaled(s), m);
                        let mut terms = commutator(std::slice::from_ref(&h_i), &[x]);
                        if a[i][j] != 0 {
                            terms.push((-s * a[i][j], vec![Atom::Vertex(g(j).scaled(s), n + m)]));
                        }
                        let sign = if s > 0 { "+" } else { "-" };
                        out.push(RelationInstance {
                            family: "[h,x]",
                            name: format!("[h_{i}({n}), x_{m}({sign}α_{j})]"),
                            terms,
                        });
                    }
                    // [x_n(α_i), x_m(−α_j)] = δ_ij ε(α_i,−α_i)(h_i(n+m) + n δ_{n,−m} C)
                    let mut terms =
                        commutator(&[Atom::Vertex(g(i), n)], &[Atom::Vertex(g(j).scaled(-1), m)]);
                    if i == j {
                        let e = eps.eval(&g(i), &g(i).scaled(-1));
                        terms.push((-e, vec![Atom::Heis(g(i), n + m)]));
                        if n == -m && n != 0 {
                            terms.push((-e * n, vec![]));
                        }
                    }
                    out.push(RelationInstance { family: "[x+,x-]", name: format!("[x_{n}(α_{i}), x_{m}(-α_{j})]"), terms });
                    // [x_n(±α_i), x_m(±α_i)] = 0
                    if i == j {
                        for s in [1, -1] {
                            let terms = commutator(
                                &[Atom::Vertex(g(i).scaled(s), n)],
                                &[Atom::Vertex(g(i).scaled(s), m)],
                            );
                            out.push(RelationInstance {
                                family: "[x,x]",
                                name: format!("[x_{n}({s}α_{i}), x_{m}({s}α_{i})]"),
                                terms,
                            });
                        }
                    }
                }
            }
        }
    }
    // (ad x_0(±α_i))^{1−a_ij} x_m(±α_j) = 0
    for i in 0..width {
        for j in 0..width {
            if i == j {
                continue;
            }
            let depth = (1 - a[i][j]) as u32;
            for s in [1, -1] {
                for &m in &range {
                    let x = Atom::Vertex(g(i).scaled(s), 0);
                    let y = Atom::Vertex(g(j).scaled(s), m);
                    out.push(RelationInstance {
                        family: "serre",
                        name: format!("(ad x_0({s}α_{i}))^{depth} x_{m}({s}α_{j})"),
                        terms: nested_ad(&x, &y, depth),
                    });
                }
            }
        }
    }
    out
}

/// (ad x)^k y = Σ_t C(k,t) (−1)^t x^{k−t} y x^t
fn nested_ad(x: &Atom, y: &Atom, k: u32) -> Vec<(i64, Vec<Atom>)> {
    (0..=k)
        .map(|t| {
            let c = binom(k, t) * if t % 2 == 1 { -1 } else { 1 };
            let mut w = vec![x.clone(); (k - t) as usize];
            w.push(y.clone());
            w.extend(std::iter::repeat_n(x.clone(), t as usize));
            (c, w)
        })
        .collect()
}

fn binom(n: u32, k: u32) -> i64 {
    (0..k).fold(1i64, |acc, i| acc * (n - i) as i64 / (i + 1) as i64)
}

/// Test vectors of F_Γ with degree ≤ D and lattice coordinates in [−2, 2].
pub fn toroidal_basis(va: &VertexAlgebra, degree: u32) -> Vec<FockVec> {
    let labels: Vec<usize> = (0..va.width()).collect();
    va.test_basis(Half::int(degree as i64), 2, &labels)
}

pub fn toroidal_relation_check(ad: &AffineData, modes: i64, degree: u32) -> Result<RelationReport, Error> {
    let va = VertexAlgebra::new(&ad.xi)?;
    let basis = toroidal_basis(&va, degree);
    Ok(check_relations(&va, &toroidal_relations(ad, modes), &basis))
}

/// Relations of the affine algebra on F̄_Γ: a_n(γ_i) for i ≥ 1 and X_n(α)
/// for α in the finite root system.
pub fn affine_relations(ad: &AffineData, modes: i64) -> Vec<RelationInstance> {
    let width = ad.cartan.len();
    let lat = crate::lattice::Lattice::new(ad.cartan.clone());
    let eps = crate::lattice::Cocycle::standard(&lat);
    let range: Vec<i64> = (-modes..=modes).collect();
    let roots = &ad.roots;
    let mut out = Vec::new();
    for i in 1..width {
        let gi = LatticeVec::basis(width, i);
        for &n in &range {
            for j in 1..width {
                let gj = LatticeVec::basis(width, j);
                for &m in &range {
                    let mut terms = commutator(&[Atom::Heis(gi.clone(), n)], &[Atom::Heis(gj.clone(), m)]);
                    let aij = ad.cartan[i][j];
                    if n == -m && n * aij != 0 {
                        terms.push((-n * aij, vec![]));
                    }
                    out.push(RelationInstance { family: "[h,h]", name: format!("[a_{n}(γ_{i}), a_{m}(γ_{j})]"), terms });
                }
            }
            for beta in roots {
                for &m in &range {
                    let mut terms = commutator(&[Atom::Heis(gi.clone(), n)], &[Atom::Vertex(beta.clone(), m)]);
                    let p = lat.pair(&gi, beta);
                    if p != 0 {
                        terms.push((-p, vec![Atom::Vertex(beta.clone(), n + m)]));
                    }
                    out.push(RelationInstance { family: "[h,X]", name: format!("[a_{n}(γ_{i}), X_{m}{beta}]"), terms });
                }
            }
        }
    }
    for alpha in roots {
        for beta in roots {
            let p = lat.pair(alpha, beta);
            let sum = alpha + beta;
            for &n in &range {
                for &m in &range {
                    let mut terms = commutator(&[Atom::Vertex(alpha.clone(), n)], &[Atom::Vertex(beta.clone(), m)]);
                    if sum.is_zero() {
                        let e = eps.eval(alpha, beta);
                        terms.push((-e, vec![Atom::Heis(alpha.clone(), n + m)]));
                        if n == -m && n != 0 {
                            terms.push((-e * n, vec![]));
                        }
                    } else if p == -1 {
                        terms.push((-eps.eval(alpha, beta), vec![Atom::Vertex(sum.clone(), n + m)]));
                    }
                    out.push(RelationInstance { family: "[X,X]", name: format!("[X_{n}{alpha}, X_{m}{beta}]"), terms });
                }
            }
        }
    }
    out
}

#[derive(Clone, Debug)]
pub struct BasicRepReport {
    pub relations: RelationReport,
    /// dim F̄_Γ in degrees 0..=D by enumeration of basis states.
    pub direct: Vec<u64>,
    /// Coefficients of θ(q)/φ(q)^r.
    pub product: Vec<u64>,
}

impl BasicRepReport {
    pub fn pass(&self) -> bool {
        self.relations.pass() && self.direct == self.product
    }
}

pub fn basic_rep_check(ad: &AffineData, degree: u32, modes: i64) -> Result<BasicRepReport, Error> {
    let va = VertexAlgebra::new(&ad.xi)?;
    let width = va.width();
    let r = width - 1;
    let labels: Vec<usize> = (1..width).collect();
    let basis = va.test_basis(Half::int(degree as i64), 2, &labels);
    let relations = check_relations(&va, &affine_relations(ad, modes), &basis);

    let gram: Vec<Vec<i64>> = ad.cartan[1..].iter().map(|row| row[1..].to_vec()).collect();
    let mut half_norms = vec![0u64; degree as usize + 1];
    half_norms[0] = 1;
    for (_, nn) in short_vectors(&gram, 2 * degree as i64)? {
        half_norms[(nn / 2) as usize] += 1;
    }
    let direct: Vec<u64> = (0..=degree as usize)
        .map(|d| (0..=d).map(|k| half_norms[k] * enumerate_partfn(r, (d - k) as u32).len() as u64).sum())
        .collect();
    // 1/φ(q)^r by repeated division by (1 − q^k)
    let mut series = half_norms.clone();
    for _ in 0..r {
        for k in 1..=degree as usize {
            for d in k..=degree as usize {
                series[d] += series[d - k];
            }
        }
    }
    Ok(BasicRepReport { relations, direct, product: series })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn classify_small() {
        assert_eq!(classify_affine(&[vec![2, -2], vec![-2, 2]]).unwrap().to_string(), "affine A1");
        let a2 = vec![vec![2, -1, -1], vec![-1, 2, -1], vec![-1, -1, 2]];
        assert_eq!(classify_affine(&a2).unwrap().to_string(), "affine A2");
        assert!(classify_affine(&[vec![2, -1], vec![-1, 2]]).is_err());
    }

    #[test]
    fn z2_data() {
        let ad = build_affine("cyclic:2").unwrap();
        assert_eq!(ad.cartan, vec![vec![2, -2], vec![-2, 2]]);
        assert_eq!(ad.delta.0, vec![1, 1]);
        assert_eq!(ad.roots.len(), 2);
        assert_eq!(ad.diagram, vec![(0, 1, 2)]);
    }

    #[test]
    fn bd8_is_d4() {
        let ad = build_affine("bd:8").unwrap();
        assert_eq!(ad.label.to_string(), "affine D4");
        assert_eq!(ad.roots.len(), 24);
    }

    #[test]
    fn z2_basic_dims() {
        let ad = build_affine("cyclic:2").unwrap();
        let rep = basic_rep_check(&ad, 2, 1).unwrap();
        assert_eq!(rep.direct, vec![1, 3, 4]);
        assert!(rep.pass(), "{:?}", rep.relations.failures);
    }
}
