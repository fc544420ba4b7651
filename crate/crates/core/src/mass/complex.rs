//! Tridegree cells of E₁, the `d₁` matrices between them, and GF(2) homology.

use std::collections::HashMap;
use std::fmt::Write as _;
use std::sync::{Arc, RwLock};

use serde::Serialize;

use super::gf2::{BitVec, Echelon};
use super::{d1, d1_monomial, MassError, Registry};
use crate::algebra::{Gen, Monomial, Poly, TriDegree};

/// The monomial basis of one cell, largest monomial first.
#[derive(Debug)]
pub struct CellBasis {
    pub degree: TriDegree,
    monomials: Vec<Monomial>,
    index: HashMap<Monomial, usize>,
}

impl CellBasis {
    fn new(degree: TriDegree, mut monomials: Vec<Monomial>) -> Self {
        monomials.sort_by(|a, b| b.cmp(a));
        let index = monomials
            .iter()
            .enumerate()
            .map(|(i, m)| (m.clone(), i))
            .collect();
        CellBasis {
            degree,
            monomials,
            index,
        }
    }

    pub fn monomials(&self) -> &[Monomial] {
        &self.monomials
    }

    pub fn len(&self) -> usize {
        self.monomials.len()
    }

    pub fn is_empty(&self) -> bool {
        self.monomials.is_empty()
    }

    fn vector(&self, p: &Poly) -> Option<BitVec> {
        let mut v = BitVec::zeros(self.len());
        for m in p.terms() {
            v.flip(*self.index.get(m)?);
        }
        Some(v)
    }

    fn poly(&self, v: &BitVec) -> Poly {
        v.ones().map(|i| self.monomials[i].clone()).collect()
    }
}

/// Every monomial in `gens` with tridegree exactly `deg`.
pub fn enumerate_cell(gens: &[Gen], deg: TriDegree) -> Vec<Monomial> {
    fn rec(
        gens: &[Gen],
        rem: TriDegree,
        cur: &mut Vec<(Gen, u32)>,
        out: &mut Vec<Monomial>,
    ) {
        let Some((&g, rest)) = gens.split_first() else {
            if rem == TriDegree::default() {
                out.push(Monomial::from_factors(cur.iter().copied()));
            }
            return;
        };
        let d = g.degree();
        if rem.q > 0 && !matches!(g, Gen::H0 | Gen::H(_)) {
            return;
        }
        let cap = |r: u32, x: u32| if x == 0 { u32::MAX } else { r / x };
        let max_e = cap(rem.q, d.q).min(cap(rem.s, d.s)).min(cap(rem.t, d.t));
        for e in 0..=max_e {
            let used = d.scale(e);
            let next = TriDegree::new(rem.q - used.q, rem.s - used.s, rem.t - used.t);
            if e > 0 {
                cur.push((g, e));
            }
            rec(rest, next, cur, out);
            if e > 0 {
                cur.pop();
            }
        }
    }
    let mut out = Vec::new();
    rec(gens, deg, &mut Vec::new(), &mut out);
    out
}

/// `d₁ : source → target` in echelon form, with the cycles of the source.
#[derive(Debug)]
struct Image {
    source: Arc<CellBasis>,
    target: Arc<CellBasis>,
    image: Echelon,
    cycles: Echelon,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Homology {
    pub degree: TriDegree,
    pub basis_dim: usize,
    pub cycles: usize,
    pub boundaries: usize,
    pub dim: usize,
    #[serde(serialize_with = "ser_polys")]
    pub representatives: Vec<Poly>,
}

fn ser_polys<S: serde::Serializer>(v: &[Poly], s: S) -> Result<S::Ok, S::Error> {
    s.collect_seq(v.iter().map(|p| p.to_string()))
}

impl Homology {
    /// `CELL q s t | dim_basis | dim_cycles | dim_boundaries | dim_H`, then one
    /// representative per line.
    pub fn to_cell_text(&self) -> String {
        let d = self.degree;
        let mut s = format!(
            "CELL {} {} {} | {} | {} | {} | {}\n",
            d.q, d.s, d.t, self.basis_dim, self.cycles, self.boundaries, self.dim
        );
        for r in &self.representatives {
            let _ = writeln!(s, "{r}");
        }
        s
    }
}

/// E₁ with cached cell bases and `d₁` matrices. Safe to share across threads.
#[derive(Debug)]
pub struct Complex {
    registry: Registry,
    bases: RwLock<HashMap<TriDegree, Arc<CellBasis>>>,
    images: RwLock<HashMap<TriDegree, Arc<Image>>>,
}

impl Complex {
    pub fn new(registry: Registry) -> Self {
        Complex {
            registry,
            bases: RwLock::default(),
            images: RwLock::default(),
        }
    }

    pub fn with_bound(t_bound: u32) -> Self {
        Complex::new(Registry::new(t_bound))
    }

    pub fn registry(&self) -> &Registry {
        &self.registry
    }

    fn check_bound(&self, deg: TriDegree) -> Result<(), MassError> {
        if deg.t > self.registry.t_bound() {
            return Err(MassError::BoundExceeded {
                t: deg.t,
                bound: self.registry.t_bound(),
            });
        }
        Ok(())
    }

    pub fn cell(&self, deg: TriDegree) -> Result<Arc<CellBasis>, MassError> {
        self.check_bound(deg)?;
        if let Some(b) = self.bases.read().unwrap().get(&deg) {
            return Ok(b.clone());
        }
        let b = Arc::new(CellBasis::new(
            deg,
            enumerate_cell(self.registry.generators(), deg),
        ));
        Ok(self
            .bases
            .write()
            .unwrap()
            .entry(deg)
            .or_insert(b)
            .clone())
    }

    /// The ordered monomial basis of `E₁^{q,s,t}`.
    pub fn cell_basis(&self, q: u32, s: u32, t: u32) -> Result<Vec<Monomial>, MassError> {
        Ok(self.cell(TriDegree::new(q, s, t))?.monomials().to_vec())
    }

    /// `d₁` into `target` from the cell below it.
    fn image(&self, target: TriDegree) -> Result<Arc<Image>, MassError> {
        if let Some(i) = self.images.read().unwrap().get(&target) {
            return Ok(i.clone());
        }
        let tcell = self.cell(target)?;
        let scell = if target.q >= 1 && target.s >= 1 {
            self.cell(TriDegree::new(target.q - 1, target.s - 1, target.t))?
        } else {
            Arc::new(CellBasis::new(target, Vec::new()))
        };
        let n = scell.len();
        let mut image = Echelon::new(tcell.len(), n);
        let mut cycles = Echelon::new(n, 0);
        for (i, m) in scell.monomials().iter().enumerate() {
            let dm = d1_monomial(m);
            let v = tcell
                .vector(&dm)
                .expect("d1 of a registered monomial stays in the registry");
            if let Err(dep) = image.insert(v, BitVec::unit(n, i)) {
                cycles.insert_untagged(dep);
            }
        }
        let img = Arc::new(Image {
            source: scell,
            target: tcell,
            image,
            cycles,
        });
        Ok(self
            .images
            .write()
            .unwrap()
            .entry(target)
            .or_insert(img)
            .clone())
    }

    fn degree_of(&self, p: &Poly) -> Result<Option<TriDegree>, MassError> {
        if p.is_zero() {
            return Ok(None);
        }
        let d = p.degree().ok_or(MassError::Inhomogeneous)?;
        for g in p.generators() {
            if !self.registry.contains(g) {
                return Err(MassError::Unregistered(g, self.registry.t_bound()));
            }
        }
        self.check_bound(d)?;
        Ok(Some(d))
    }

    pub fn is_cycle(&self, p: &Poly) -> Result<bool, MassError> {
        if !p.is_homogeneous() {
            return Err(MassError::Inhomogeneous);
        }
        Ok(d1(p).is_zero())
    }

    pub fn is_boundary(&self, p: &Poly) -> Result<bool, MassError> {
        let Some(deg) = self.degree_of(p)? else {
            return Ok(true);
        };
        let img = self.image(deg)?;
        let v = img.target.vector(p).expect("registered monomials lie in the cell");
        Ok(img.image.contains(&v))
    }

    /// Some `x` with `d₁ x = p`.
    pub fn preimage(&self, p: &Poly) -> Result<Option<Poly>, MassError> {
        let Some(deg) = self.degree_of(p)? else {
            return Ok(Some(Poly::zero()));
        };
        let img = self.image(deg)?;
        let v = img.target.vector(p).expect("registered monomials lie in the cell");
        Ok(img.image.solve(&v).map(|tag| img.source.poly(&tag)))
    }

    /// The solution of `d₁ x = p` with every leading term of a source cycle
    /// eliminated; deterministic and independent of elimination order.
    pub fn preimage_normal_form(&self, p: &Poly) -> Result<Option<Poly>, MassError> {
        let Some(deg) = self.degree_of(p)? else {
            return Ok(Some(Poly::zero()));
        };
        let img = self.image(deg)?;
        let v = img.target.vector(p).expect("registered monomials lie in the cell");
        Ok(img.image.solve(&v).map(|mut tag| {
            img.cycles.reduce_untagged(&mut tag);
            img.source.poly(&tag)
        }))
    }

    /// Reduces a cycle modulo boundaries to its normal form, for comparing classes.
    pub fn class_normal_form(&self, p: &Poly) -> Result<Poly, MassError> {
        let Some(deg) = self.degree_of(p)? else {
            return Ok(Poly::zero());
        };
        let img = self.image(deg)?;
        let mut v = img.target.vector(p).expect("registered monomials lie in the cell");
        img.image.reduce_untagged(&mut v);
        Ok(img.target.poly(&v))
    }

    /// Dimension of the span of `ps` in homology. All must share one tridegree.
    pub fn homology_rank(&self, ps: &[Poly]) -> Result<usize, MassError> {
        let mut ech: Option<(Arc<Image>, Echelon)> = None;
        let mut rank = 0;
        for p in ps {
            let Some(deg) = self.degree_of(p)? else { continue };
            if ech.is_none() {
                let img = self.image(deg)?;
                let e = img.image.clone();
                ech = Some((img, e));
            }
            let (img, e) = ech.as_mut().unwrap();
            if img.target.degree != deg {
                return Err(MassError::DegreeMismatch(img.target.degree, deg));
            }
            let v = img.target.vector(p).expect("registered monomials lie in the cell");
            if e.insert_untagged(v) {
                rank += 1;
            }
        }
        Ok(rank)
    }

    pub fn homology(&self, deg: TriDegree) -> Result<Homology, MassError> {
        let up = TriDegree::new(deg.q + 1, deg.s + 1, deg.t);
        let out = self.image(up)?;
        let inn = self.image(deg)?;
        let basis = out.source.clone();
        let mut span = inn.image.clone();
        let mut representatives = Vec::new();
        for z in out.cycles.rows() {
            let mut z = z.clone();
            span.reduce_untagged(&mut z);
            if !z.is_zero() {
                representatives.push(basis.poly(&z));
                span.insert_untagged(z);
            }
        }
        let cycles = out.cycles.rank();
        let boundaries = inn.image.rank();
        Ok(Homology {
            degree: deg,
            basis_dim: basis.len(),
            cycles,
            boundaries,
            dim: cycles - boundaries,
            representatives,
        })
    }
}

impl Default for Complex {
    fn default() -> Self {
        Complex::new(Registry::default())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum RelationMode {
    Identical,
    UpToBoundary,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RelationVerdict {
    pub mode: RelationMode,
    pub holds: bool,
    pub identical: bool,
    pub degree: Option<TriDegree>,
    pub diff: Poly,
}

/// Whether `lhs = rhs` in E₁ (identical) or in E₂ (modulo `im d₁`).
pub fn check_relation(
    cx: &Complex,
    lhs: &Poly,
    rhs: &Poly,
    mode: RelationMode,
) -> Result<RelationVerdict, MassError> {
    let (dl, dr) = (lhs.degree(), rhs.degree());
    if (!lhs.is_zero() && dl.is_none()) || (!rhs.is_zero() && dr.is_none()) {
        return Err(MassError::Inhomogeneous);
    }
    if let (Some(a), Some(b)) = (dl, dr) {
        if a != b {
            return Err(MassError::DegreeMismatch(a, b));
        }
    }
    let diff = lhs + rhs;
    let identical = diff.is_zero();
    let holds = match mode {
        RelationMode::Identical => identical,
        RelationMode::UpToBoundary => identical || cx.is_boundary(&diff)?,
    };
    Ok(RelationVerdict {
        mode,
        holds,
        identical,
        degree: dl.or(dr),
        diff,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::parse_poly;

    #[test]
    fn small_cells() {
        let cx = Complex::default();
        assert_eq!(cx.cell_basis(0, 1, 2).unwrap(), vec![Monomial::gen(Gen::U(1))]);
        assert_eq!(cx.cell_basis(2, 0, 4).unwrap(), vec![Monomial::gen(Gen::H(1)).pow(2)]);
        assert_eq!(cx.cell_basis(0, 0, 0).unwrap(), vec![Monomial::one()]);
        assert!(cx.cell_basis(0, 0, 200).is_err());
    }

    #[test]
    fn u1_cell_homology() {
        let cx = Complex::default();
        let h = cx.homology(TriDegree::new(0, 1, 2)).unwrap();
        assert_eq!((h.basis_dim, h.dim), (1, 1));
        assert!(h.to_cell_text().starts_with("CELL 0 1 2 | 1 | 1 | 0 | 1\nu1\n"));
    }

    #[test]
    fn boundaries_and_preimages() {
        let cx = Complex::default();
        let x = parse_poly("h1*c5 + h2*c4 + h3*c2").unwrap();
        let y = d1(&x);
        assert!(cx.is_boundary(&y).unwrap());
        let pre = cx.preimage(&y).unwrap().unwrap();
        assert_eq!(d1(&pre), y);
        assert!(!cx.is_boundary(&parse_poly("h1^2").unwrap()).unwrap());
    }

    #[test]
    fn relation_errors() {
        let cx = Complex::default();
        let a = parse_poly("u1").unwrap();
        let b = parse_poly("u2").unwrap();
        assert!(matches!(
            check_relation(&cx, &a, &b, RelationMode::Identical),
            Err(MassError::DegreeMismatch(..))
        ));
        let v = check_relation(&cx, &a, &a, RelationMode::Identical).unwrap();
        assert!(v.holds && v.identical);
    }
}
