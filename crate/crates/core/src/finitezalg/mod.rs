//! Finitely generated commutative Z-algebras that are finitely generated as
//! Z-modules, given explicitly by module generators, a syzygy lattice and
//! structure constants.

mod compact;

pub use compact::*;

use alloc::string::{String, ToString};
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::arith::ZZ;
use crate::context::Context;
use crate::error::{Error, Result};
use crate::grobner::{normal_form, strong_groebner, StrongGroebnerBasis};
use crate::intlat::{snf, solve_left, IntMat, IntegerLattice, ZVec};
use crate::poly::{Ideal, Monomial, Polynomial, TermOrdering};

/// Where an algebra came from: variable names and the ideal of relations.
#[derive(Clone, Debug)]
pub struct Presentation {
    pub var_names: Vec<String>,
    pub ideal: Ideal<ZZ>,
}

/// Rank, invariant factors and torsion exponent of the additive group.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModuleStructure {
    pub rank: usize,
    /// Invariant factors greater than one, each dividing the next.
    pub invariant_factors: Vec<BigInt>,
    /// Exponent of the torsion subgroup; one when torsion-free.
    pub torsion_exponent: BigInt,
}

/// `R = Z^n / L` with multiplication given by structure constants on the
/// module generators `g_0 = 1, g_1, ..., g_{n-1}`.
///
/// Elements are coordinate vectors; every operation returns the canonical
/// representative modulo the syzygy lattice `L`.
#[derive(Clone, Debug)]
pub struct ExplicitAlgebra {
    presentation: Arc<Presentation>,
    generators: Vec<Monomial>,
    syzygies: IntegerLattice,
    table: Vec<Vec<ZVec>>,
    var_images: Vec<ZVec>,
}

fn unit_vector(n: usize, i: usize) -> ZVec {
    let mut v = vec![BigInt::zero(); n];
    v[i] = BigInt::one();
    v
}

impl ExplicitAlgebra {
    /// Builds `Z[x] / I` from a strong Gröbner basis in degrevlex order.
    pub fn from_ideal(ideal: &Ideal<ZZ>, var_names: &[String], ctx: &Context) -> Result<Self> {
        let ideal = Ideal::new(&ZZ, ideal.nvars, TermOrdering::DegRevLex, ideal.generators.clone());
        let gb = strong_groebner(&ideal, ctx)?;
        let pres = Presentation { var_names: var_names.to_vec(), ideal };
        Self::from_groebner(pres, &gb)
    }

    pub fn from_groebner(pres: Presentation, gb: &StrongGroebnerBasis<ZZ>) -> Result<Self> {
        let n = gb.nvars;
        let monic: Vec<Polynomial<ZZ>> = gb.elements.iter().filter(|g| g.lc().is_one()).cloned().collect();
        let mut bounds = vec![0u32; n];
        for g in &monic {
            if let Some((i, e)) = g.lm().pure_power() {
                if bounds[i] == 0 || e < bounds[i] {
                    bounds[i] = e;
                }
            }
            if g.lm().is_one() {
                bounds.iter_mut().for_each(|b| *b = 1);
            }
        }
        if let Some(i) = bounds.iter().position(|&b| b == 0) {
            return Err(Error::NotModuleFinite(alloc::format!(
                "no monic leading term is a pure power of {}",
                pres.var_names.get(i).cloned().unwrap_or_default()
            )));
        }
        let in_macaulay = |m: &Monomial| !monic.iter().any(|g| g.lm().divides(m));
        // enumerate the box of exponents below the pure-power bounds
        let mut gens = Vec::new();
        let mut e = vec![0u32; n];
        loop {
            let m = Monomial(e.clone());
            if in_macaulay(&m) {
                gens.push(m);
            }
            let mut k = 0;
            while k < n {
                e[k] += 1;
                if e[k] < bounds[k] {
                    break;
                }
                e[k] = 0;
                k += 1;
            }
            if k == n {
                break;
            }
        }
        let ord = TermOrdering::DegRevLex;
        gens.sort_by(|a, b| ord.cmp(a, b));
        let dim = gens.len();
        let coords = |p: &Polynomial<ZZ>| -> Result<ZVec> {
            let mut v = vec![BigInt::zero(); dim];
            for (m, c) in p.terms() {
                let idx = gens.binary_search_by(|g| ord.cmp(g, m)).map_err(|_| {
                    Error::Internal("normal form left the Macaulay basis".to_string())
                })?;
                v[idx] = c.clone();
            }
            Ok(v)
        };
        if dim == 0 {
            // the zero ring: a single generator that is itself a syzygy
            let one = Monomial::one(n);
            let syz = IntegerLattice::full(1);
            let table = vec![vec![vec![BigInt::zero()]]];
            return Ok(ExplicitAlgebra {
                presentation: Arc::new(pres),
                generators: vec![one],
                syzygies: syz,
                table,
                var_images: vec![vec![BigInt::zero()]; n],
            });
        }
        let mut syz = Vec::new();
        for g in gb.elements.iter().filter(|g| !g.lc().is_one()) {
            for t in &gens {
                if !g.lm().divides(t) {
                    continue;
                }
                let s = g.lm().quotient(t);
                let p = normal_form(&g.mul_term(&s, &BigInt::one()), &monic);
                syz.push(coords(&p)?);
            }
        }
        let syzygies = IntegerLattice::new(dim, syz);
        let mut table = vec![vec![Vec::new(); dim]; dim];
        for i in 0..dim {
            for j in i..dim {
                let p = Polynomial::monomial(&ZZ, ord, gens[i].mul(&gens[j]), BigInt::one());
                let v = syzygies.reduce(&coords(&normal_form(&p, &gb.elements))?);
                table[j][i] = v.clone();
                table[i][j] = v;
            }
        }
        let var_images = (0..n)
            .map(|i| {
                let p = Polynomial::var(&ZZ, n, ord, i);
                coords(&normal_form(&p, &gb.elements)).map(|v| syzygies.reduce(&v))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(ExplicitAlgebra { presentation: Arc::new(pres), generators: gens, syzygies, table, var_images })
    }

    /// Builds an algebra from module generators `1, g_1, ..., g_m` named by
    /// `names`, syzygy rows and products `g_i g_j` for `1 <= i <= j <= m`
    /// (missing products are an error). Checks that the data define a
    /// commutative associative ring with identity.
    pub fn from_explicit(names: &[String], syzygies: Vec<ZVec>, products: &[(usize, usize, ZVec)]) -> Result<Self> {
        let m = names.len();
        let dim = m + 1;
        let bad = |msg: String| Err(Error::InvalidInput(msg));
        for r in syzygies.iter().chain(products.iter().map(|p| &p.2)) {
            if r.len() != dim {
                return bad(alloc::format!("vector of length {} where {} coordinates were expected", r.len(), dim));
            }
        }
        let lattice = IntegerLattice::new(dim, syzygies);
        let mut table: Vec<Vec<Option<ZVec>>> = vec![vec![None; dim]; dim];
        for j in 0..dim {
            table[0][j] = Some(unit_vector(dim, j));
            table[j][0] = Some(unit_vector(dim, j));
        }
        for (i, j, v) in products {
            let (i, j) = (*i, *j);
            if i == 0 || j == 0 || i > m || j > m {
                return bad(alloc::format!("product index ({i}, {j}) out of range"));
            }
            let v = lattice.reduce(v);
            for (a, b) in [(i, j), (j, i)] {
                if let Some(old) = &table[a][b] {
                    if lattice.reduce(old) != v && a != 0 {
                        return bad(alloc::format!("conflicting products for {} * {}", names[i - 1], names[j - 1]));
                    }
                }
                table[a][b] = Some(v.clone());
            }
        }
        let mut full = vec![vec![Vec::new(); dim]; dim];
        for i in 0..dim {
            for j in 0..dim {
                match &table[i][j] {
                    Some(v) => full[i][j] = v.clone(),
                    None => return bad(alloc::format!("missing product {} * {}", names[i - 1], names[j - 1])),
                }
            }
        }
        let nv = m;
        let ord = TermOrdering::DegRevLex;
        let mut generators = vec![Monomial::one(nv)];
        generators.extend((0..m).map(|i| Monomial::var(nv, i)));
        let var_images = (1..dim).map(|i| unit_vector(dim, i)).collect();
        // presentation ideal: products and syzygies as linear relations
        let lin = |v: &ZVec| -> Polynomial<ZZ> {
            let terms = v.iter().enumerate().map(|(k, c)| (generators[k].clone(), c.clone())).collect();
            Polynomial::from_terms(&ZZ, nv, ord, terms)
        };
        let mut rels: Vec<Polynomial<ZZ>> = lattice.basis().iter().map(lin).collect();
        for i in 1..dim {
            for j in i..dim {
                let prod = Polynomial::monomial(&ZZ, ord, generators[i].mul(&generators[j]), BigInt::one());
                rels.push(prod.sub(&lin(&full[i][j])));
            }
        }
        let pres = Presentation { var_names: names.to_vec(), ideal: Ideal::new(&ZZ, nv, ord, rels) };
        let alg = ExplicitAlgebra { presentation: Arc::new(pres), generators, syzygies: lattice, table: full, var_images };
        alg.check_axioms()?;
        Ok(alg)
    }

    fn check_axioms(&self) -> Result<()> {
        let n = self.dim();
        for i in 0..n {
            for b in self.syzygies.basis() {
                if !self.is_zero(&self.mul_raw(&unit_vector(n, i), b)) {
                    return Err(Error::InvalidInput("the syzygy lattice is not an ideal".to_string()));
                }
            }
            for j in 0..n {
                if !self.eq(&self.table[i][j], &self.table[j][i]) {
                    return Err(Error::InvalidInput("multiplication is not commutative".to_string()));
                }
                for k in 0..n {
                    let l = self.mul(&self.table[i][j], &unit_vector(n, k));
                    let r = self.mul(&unit_vector(n, i), &self.table[j][k]);
                    if !self.eq(&l, &r) {
                        return Err(Error::InvalidInput("multiplication is not associative".to_string()));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn presentation(&self) -> &Presentation {
        &self.presentation
    }
    pub fn var_names(&self) -> &[String] {
        &self.presentation.var_names
    }
    pub fn generators(&self) -> &[Monomial] {
        &self.generators
    }
    pub fn dim(&self) -> usize {
        self.generators.len()
    }
    pub fn syzygies(&self) -> &IntegerLattice {
        &self.syzygies
    }
    pub fn var_image(&self, i: usize) -> &ZVec {
        &self.var_images[i]
    }
    pub fn structure_constant(&self, i: usize, j: usize) -> &ZVec {
        &self.table[i][j]
    }

    pub fn module_structure(&self) -> ModuleStructure {
        let n = self.dim();
        if self.syzygies.is_zero() {
            return ModuleStructure { rank: n, invariant_factors: Vec::new(), torsion_exponent: BigInt::one() };
        }
        let s = snf(&self.syzygies.matrix());
        let inv = s.invariant_factors();
        let tau = inv.last().cloned().unwrap_or_else(BigInt::one);
        ModuleStructure { rank: n - s.rank(), invariant_factors: inv, torsion_exponent: tau }
    }

    /// Additive order of 1, i.e. the generator of `I ∩ Z`; zero when the
    /// characteristic is zero.
    pub fn characteristic(&self) -> BigInt {
        self.additive_order(&self.one())
    }

    pub fn additive_order(&self, v: &[BigInt]) -> BigInt {
        let c = self.compact();
        let y = c.to_compact(v);
        let mut ord = BigInt::one();
        for (yi, d) in y.iter().zip(&c.moduli) {
            if yi.is_zero() {
                continue;
            }
            if d.is_zero() {
                return BigInt::zero();
            }
            ord = ord.lcm(&(d / yi.gcd(d)));
        }
        ord
    }

    pub fn compact(&self) -> CompactForm {
        CompactForm::new(self)
    }

    pub fn zero(&self) -> ZVec {
        vec![BigInt::zero(); self.dim()]
    }
    pub fn one(&self) -> ZVec {
        self.syzygies.reduce(&unit_vector(self.dim(), 0))
    }
    pub fn canon(&self, v: &[BigInt]) -> ZVec {
        self.syzygies.reduce(v)
    }
    pub fn is_zero(&self, v: &[BigInt]) -> bool {
        self.syzygies.contains(v)
    }
    pub fn eq(&self, a: &[BigInt], b: &[BigInt]) -> bool {
        self.is_zero(&self.sub_raw(a, b))
    }
    fn sub_raw(&self, a: &[BigInt], b: &[BigInt]) -> ZVec {
        a.iter().zip(b).map(|(x, y)| x - y).collect()
    }
    pub fn add(&self, a: &[BigInt], b: &[BigInt]) -> ZVec {
        self.canon(&a.iter().zip(b).map(|(x, y)| x + y).collect::<ZVec>())
    }
    pub fn sub(&self, a: &[BigInt], b: &[BigInt]) -> ZVec {
        self.canon(&self.sub_raw(a, b))
    }
    pub fn neg(&self, a: &[BigInt]) -> ZVec {
        self.canon(&a.iter().map(|x| -x).collect::<ZVec>())
    }
    pub fn scale(&self, a: &[BigInt], k: &BigInt) -> ZVec {
        self.canon(&a.iter().map(|x| x * k).collect::<ZVec>())
    }
    fn mul_raw(&self, a: &[BigInt], b: &[BigInt]) -> ZVec {
        let n = self.dim();
        let mut out = vec![BigInt::zero(); n];
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                if y.is_zero() {
                    continue;
                }
                let xy = x * y;
                for (o, c) in out.iter_mut().zip(&self.table[i][j]) {
                    if !c.is_zero() {
                        *o += &xy * c;
                    }
                }
            }
        }
        out
    }
    pub fn mul(&self, a: &[BigInt], b: &[BigInt]) -> ZVec {
        self.canon(&self.mul_raw(a, b))
    }
    pub fn pow_u(&self, a: &[BigInt], e: &BigInt) -> ZVec {
        let mut result = self.one();
        let base = self.canon(a);
        let bits = e.bits();
        for i in (0..bits).rev() {
            result = self.mul(&result, &result);
            if e.bit(i) {
                result = self.mul(&result, &base);
            }
        }
        result
    }
    /// `a^e` for any integer `e`; negative powers need `a` to be a unit.
    pub fn pow(&self, a: &[BigInt], e: &BigInt) -> Result<ZVec> {
        if e.is_negative() {
            let inv = self.inverse(a).ok_or_else(|| Error::NotAUnit(self.display(a)))?;
            Ok(self.pow_u(&inv, &-e))
        } else {
            Ok(self.pow_u(a, e))
        }
    }
    /// Power product `prod u_i^{e_i}`.
    pub fn power_product(&self, us: &[ZVec], e: &[BigInt]) -> Result<ZVec> {
        let mut acc = self.one();
        for (u, k) in us.iter().zip(e) {
            if !k.is_zero() {
                acc = self.mul(&acc, &self.pow(u, k)?);
            }
        }
        Ok(acc)
    }

    /// Rows `a g_j`: the multiplication map in the generator basis.
    pub fn mult_rows(&self, a: &[BigInt]) -> Vec<ZVec> {
        (0..self.dim()).map(|j| self.mul_raw(a, &unit_vector(self.dim(), j))).collect()
    }

    /// Some `x` with `sum_j x_j rows_j ≡ target` modulo the syzygies.
    fn solve_mod_syz(&self, rows: Vec<ZVec>, target: &[BigInt]) -> Option<ZVec> {
        let k = rows.len();
        let mut stacked = rows;
        stacked.extend(self.syzygies.basis().iter().cloned());
        let sol = solve_left(&IntMat::new(self.dim(), stacked), target)?;
        Some(sol[..k].to_vec())
    }

    pub fn inverse(&self, a: &[BigInt]) -> Option<ZVec> {
        let x = self.solve_mod_syz(self.mult_rows(a), &unit_vector(self.dim(), 0))?;
        Some(self.canon(&x))
    }

    pub fn is_unit(&self, a: &[BigInt]) -> bool {
        self.inverse(a).is_some()
    }

    /// Some `x` with `m x = a`, if one exists.
    pub fn divide_exact(&self, a: &[BigInt], m: &BigInt) -> Option<ZVec> {
        let n = self.dim();
        let rows = (0..n).map(|j| {
            let mut v = unit_vector(n, j);
            v[j] = m.clone();
            v
        }).collect();
        self.solve_mod_syz(rows, a).map(|x| self.canon(&x))
    }

    /// The element represented by a polynomial in the presentation variables.
    pub fn from_poly(&self, p: &Polynomial<ZZ>) -> ZVec {
        let mut acc = self.zero();
        for (m, c) in p.terms() {
            let mut t = self.one();
            for (i, &e) in m.0.iter().enumerate() {
                for _ in 0..e {
                    t = self.mul(&t, &self.var_images[i]);
                }
            }
            acc = self.add(&acc, &t.iter().map(|x| x * c).collect::<ZVec>());
        }
        acc
    }

    /// Representative with coordinates at torsion positions reduced into a
    /// symmetric range, written as a polynomial in the module generators.
    pub fn to_poly(&self, v: &[BigInt]) -> Polynomial<ZZ> {
        let mut w = self.canon(v);
        for (row, &c) in self.syzygies.basis().iter().zip(self.syzygies.pivots()) {
            let p = &row[c];
            if &w[c] * 2 > *p {
                for (x, y) in w.iter_mut().zip(row) {
                    *x -= y;
                }
            }
        }
        let nv = self.presentation.ideal.nvars;
        let terms = w.into_iter().enumerate().map(|(k, c)| (self.generators[k].clone(), c)).collect();
        Polynomial::from_terms(&ZZ, nv, TermOrdering::DegRevLex, terms)
    }

    pub fn display(&self, v: &[BigInt]) -> String {
        self.to_poly(v).display(self.var_names())
    }

    /// The ideal generated by some elements, as a lattice containing `L`.
    pub fn ideal_generated(&self, elems: &[ZVec]) -> IntegerLattice {
        let mut gens = Vec::new();
        for a in elems {
            gens.extend(self.mult_rows(a));
        }
        self.syzygies.add_vectors(&gens)
    }

    /// `m R + L`.
    pub fn integer_ideal(&self, m: &BigInt) -> IntegerLattice {
        self.syzygies.sum(&IntegerLattice::scaled_identity(self.dim(), m))
    }

    /// `{x : m x = 0}` as a lattice containing `L`.
    pub fn annihilator_of_integer(&self, m: &BigInt) -> IntegerLattice {
        let n = self.dim();
        let rows: Vec<ZVec> = (0..n).map(|j| {
            let mut v = vec![BigInt::zero(); n];
            v[j] = m.clone();
            v
        }).collect();
        IntegerLattice::preimage(&rows, n, &self.syzygies)
    }

    /// `R / J` for an ideal lattice `J ⊇ L`.
    pub fn quotient(&self, j: &IntegerLattice) -> ExplicitAlgebra {
        let j = j.sum(&self.syzygies);
        let mut pres = (*self.presentation).clone();
        for b in j.basis() {
            if !self.syzygies.contains(b) {
                pres.ideal.generators.push(self.to_poly(b));
            }
        }
        let table = self.table.iter().map(|r| r.iter().map(|v| j.reduce(v)).collect()).collect();
        let var_images = self.var_images.iter().map(|v| j.reduce(v)).collect();
        ExplicitAlgebra {
            presentation: Arc::new(pres),
            generators: self.generators.clone(),
            syzygies: j,
            table,
            var_images,
        }
    }

    pub fn quotient_by_integer(&self, m: &BigInt) -> ExplicitAlgebra {
        self.quotient(&self.integer_ideal(m))
    }

    /// Generators of the ideal of `Z[x]` corresponding to an ideal lattice
    /// of this algebra.
    pub fn ideal_to_polys(&self, j: &IntegerLattice) -> Ideal<ZZ> {
        let base = &self.presentation.ideal;
        let mut gens = base.generators.clone();
        for b in j.basis() {
            if !self.syzygies.contains(b) {
                gens.push(self.to_poly(b));
            }
        }
        Ideal::new(&ZZ, base.nvars, TermOrdering::DegRevLex, gens)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse_polynomial;

    pub(crate) fn algebra(gens: &[&str], vars: &[&str]) -> ExplicitAlgebra {
        let n: Vec<String> = vars.iter().map(|s| s.to_string()).collect();
        let g = gens.iter().map(|s| parse_polynomial(s, &n, 1, 0).unwrap()).collect();
        ExplicitAlgebra::from_ideal(&Ideal::new(&ZZ, n.len(), TermOrdering::DegRevLex, g), &n, &Context::new(0)).unwrap()
    }

    fn el(a: &ExplicitAlgebra, s: &str) -> ZVec {
        a.from_poly(&parse_polynomial(s, a.var_names(), 1, 0).unwrap())
    }

    #[test]
    fn macaulay_basis_of_the_nilpotent_example() {
        let a = algebra(&["x^3", "6*x^2", "y^2+y+1"], &["x", "y"]);
        let mut gens: Vec<String> = a.generators().iter().map(|m| m.display(a.var_names())).collect();
        gens.sort();
        let mut want: Vec<String> = ["x^2*y", "x*y", "y", "x^2", "x", "1"].iter().map(|s| s.to_string()).collect();
        want.sort();
        assert_eq!(gens, want);
        let ms = a.module_structure();
        assert_eq!(ms.rank, 4);
        assert_eq!(ms.invariant_factors, vec![BigInt::from(6), BigInt::from(6)]);
        assert_eq!(a.characteristic(), BigInt::zero());
    }

    #[test]
    fn mod_eight_ring() {
        let a = algebra(&["x^2+x+1", "y^2+y+1", "8"], &["x", "y"]);
        assert_eq!(a.dim(), 4);
        assert_eq!(a.characteristic(), BigInt::from(8));
        let u = el(&a, "2*x+1");
        let inv = a.inverse(&u).unwrap();
        assert_eq!(a.mul(&u, &inv), a.one());
        assert_eq!(a.display(&el(&a, "-2*y-1")), "-2*y - 1");
        assert!(a.inverse(&el(&a, "2*x")).is_none());
        assert_eq!(a.display(&a.pow_u(&el(&a, "x"), &BigInt::from(3))), "1");
    }

    #[test]
    fn torsion_and_division() {
        let a = algebra(&["x^2+x+1", "y^2+y+1", "6*z^2", "z^3"], &["x", "y", "z"]);
        let ms = a.module_structure();
        assert_eq!(ms.rank, 8);
        assert_eq!(ms.torsion_exponent, BigInt::from(6));
        let z2 = el(&a, "z^2");
        assert!(a.divide_exact(&a.scale(&z2, &BigInt::from(3)), &BigInt::from(3)).is_some());
        assert!(a.divide_exact(&z2, &BigInt::from(2)).is_none());
        assert_eq!(a.additive_order(&el(&a, "3*z^2")), BigInt::from(2));
    }

    #[test]
    fn explicit_input_round_trip() {
        // Z[i] given by 1, i with i*i = -1
        let names = vec!["i".to_string()];
        let a = ExplicitAlgebra::from_explicit(&names, vec![], &[(1, 1, vec![BigInt::from(-1), BigInt::zero()])]).unwrap();
        let i = a.var_image(0).clone();
        assert_eq!(a.display(&a.mul(&i, &i)), "-1");
        assert!(ExplicitAlgebra::from_explicit(&names, vec![], &[]).is_err());
        // a non-associative table is rejected
        let names = vec!["a".to_string(), "b".to_string()];
        let bad = ExplicitAlgebra::from_explicit(
            &names,
            vec![],
            &[
                (1, 1, vec![BigInt::zero(), BigInt::zero(), BigInt::one()]),
                (1, 2, vec![BigInt::one(), BigInt::zero(), BigInt::zero()]),
                (2, 2, vec![BigInt::zero(), BigInt::zero(), BigInt::zero()]),
            ],
        );
        assert!(bad.is_err());
    }

    #[test]
    fn not_module_finite() {
        let n: Vec<String> = vec!["x".into(), "y".into()];
        let g = vec![parse_polynomial("x^2 - 1", &n, 1, 0).unwrap()];
        let r = ExplicitAlgebra::from_ideal(&Ideal::new(&ZZ, 2, TermOrdering::DegRevLex, g), &n, &Context::new(0));
        assert!(matches!(r, Err(Error::NotModuleFinite(_))));
        let g = vec![parse_polynomial("2*x - 1", &n[..1], 1, 0).unwrap()];
        let r = ExplicitAlgebra::from_ideal(&Ideal::new(&ZZ, 1, TermOrdering::DegRevLex, g), &n[..1], &Context::new(0));
        assert!(matches!(r, Err(Error::NotModuleFinite(_))));
    }
}
