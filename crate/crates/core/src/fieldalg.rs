//! Finite-dimensional commutative algebras over a field: arithmetic,
//! minimal polynomials, nilradicals and splitting of reduced algebras into
//! products of fields.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::Zero;
use rand::{Rng, RngCore};

use crate::arith::{Field, Fp, Ring, QQ};
use crate::error::{internal, Result};
use crate::finitezalg::ExplicitAlgebra;
use crate::linalg::{self, left_kernel, mat_mul, solve_left, vec_mat, Mat, Subspace};
use crate::upoly::{factor_fp, factor_q, roots_fp, UPoly};

/// A linear map `F^n -> F^m` acting on row vectors: `v -> v M`.
#[derive(Clone, Debug)]
pub struct LinearMap<F: Field> {
    pub m: Mat<F::El>,
    pub out_dim: usize,
}

impl<F: Field> LinearMap<F> {
    pub fn identity(f: &F, n: usize) -> Self {
        LinearMap { m: linalg::identity(f, n), out_dim: n }
    }
    pub fn apply(&self, f: &F, v: &[F::El]) -> Vec<F::El> {
        vec_mat(f, v, &self.m, self.out_dim)
    }
    /// `self` followed by `next`.
    pub fn then(&self, f: &F, next: &LinearMap<F>) -> LinearMap<F> {
        LinearMap { m: mat_mul(f, &self.m, &next.m, next.out_dim), out_dim: next.out_dim }
    }
    /// Some preimage of `y`.
    pub fn lift(&self, f: &F, y: &[F::El]) -> Option<Vec<F::El>> {
        solve_left(f, &self.m, self.out_dim, y)
    }
}

#[derive(Clone, Debug)]
pub struct FieldAlgebra<F: Field> {
    pub field: F,
    dim: usize,
    table: Vec<Vec<Vec<F::El>>>,
    one: Vec<F::El>,
}

/// One field factor of a reduced algebra.
#[derive(Clone, Debug)]
pub struct FieldComponent<F: Field> {
    pub field: FieldAlgebra<F>,
    /// The primitive idempotent of the parent algebra cutting out this factor.
    pub idempotent: Vec<F::El>,
    /// The projection from the parent algebra onto the factor.
    pub map: LinearMap<F>,
}

impl<F: Field> FieldAlgebra<F> {
    pub fn new(field: F, table: Vec<Vec<Vec<F::El>>>, one: Vec<F::El>) -> Self {
        let dim = one.len();
        FieldAlgebra { field, dim, table, one }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }
    pub fn one(&self) -> Vec<F::El> {
        self.one.clone()
    }
    pub fn zero(&self) -> Vec<F::El> {
        vec![self.field.zero(); self.dim]
    }
    pub fn basis(&self, i: usize) -> Vec<F::El> {
        let mut v = self.zero();
        v[i] = self.field.one();
        v
    }
    pub fn is_zero(&self, a: &[F::El]) -> bool {
        linalg::is_zero_vec(&self.field, a)
    }
    pub fn add(&self, a: &[F::El], b: &[F::El]) -> Vec<F::El> {
        a.iter().zip(b).map(|(x, y)| self.field.add(x, y)).collect()
    }
    pub fn sub(&self, a: &[F::El], b: &[F::El]) -> Vec<F::El> {
        a.iter().zip(b).map(|(x, y)| self.field.sub(x, y)).collect()
    }
    pub fn scale(&self, a: &[F::El], c: &F::El) -> Vec<F::El> {
        a.iter().map(|x| self.field.mul(x, c)).collect()
    }
    pub fn mul(&self, a: &[F::El], b: &[F::El]) -> Vec<F::El> {
        let f = &self.field;
        let mut out = self.zero();
        for (i, x) in a.iter().enumerate() {
            if f.is_zero(x) {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                if f.is_zero(y) {
                    continue;
                }
                let xy = f.mul(x, y);
                linalg::axpy(f, &mut out, &xy, &self.table[i][j]);
            }
        }
        out
    }
    pub fn pow(&self, a: &[F::El], e: &BigUint) -> Vec<F::El> {
        let mut r = self.one();
        for i in (0..e.bits()).rev() {
            r = self.mul(&r, &r);
            if e.bit(i) {
                r = self.mul(&r, a);
            }
        }
        r
    }
    /// `a^e` for any integer `e`; `None` when `e < 0` and `a` is not a unit.
    pub fn pow_signed(&self, a: &[F::El], e: &BigInt) -> Option<Vec<F::El>> {
        if e.sign() == num_bigint::Sign::Minus {
            Some(self.pow(&self.inverse(a)?, &e.magnitude().clone()))
        } else {
            Some(self.pow(a, e.magnitude()))
        }
    }
    pub fn power_product(&self, us: &[Vec<F::El>], e: &[BigInt]) -> Option<Vec<F::El>> {
        let mut acc = self.one();
        for (u, k) in us.iter().zip(e) {
            if !k.is_zero() {
                acc = self.mul(&acc, &self.pow_signed(u, k)?);
            }
        }
        Some(acc)
    }
    /// Rows `a b_j`.
    pub fn mult_rows(&self, a: &[F::El]) -> Mat<F::El> {
        (0..self.dim).map(|j| self.mul(a, &self.basis(j))).collect()
    }
    pub fn inverse(&self, a: &[F::El]) -> Option<Vec<F::El>> {
        solve_left(&self.field, &self.mult_rows(a), self.dim, &self.one)
    }
    pub fn trace(&self, a: &[F::El]) -> F::El {
        let rows = self.mult_rows(a);
        (0..self.dim).fold(self.field.zero(), |acc, j| self.field.add(&acc, &rows[j][j]))
    }
    /// Monic minimal polynomial of `a`.
    pub fn minpoly(&self, a: &[F::El]) -> UPoly<F::El> {
        let f = &self.field;
        let mut powers = vec![self.one()];
        loop {
            let next = self.mul(powers.last().unwrap(), a);
            if let Some(c) = solve_left(f, &powers, self.dim, &next) {
                let mut coeffs: Vec<F::El> = c.iter().map(|x| f.neg(x)).collect();
                coeffs.push(f.one());
                return UPoly::from_coeffs(f, coeffs);
            }
            powers.push(next);
        }
    }
    pub fn eval_poly(&self, p: &UPoly<F::El>, a: &[F::El]) -> Vec<F::El> {
        let mut acc = self.zero();
        for c in p.c.iter().rev() {
            acc = self.mul(&acc, a);
            acc = self.add(&acc, &self.scale(&self.one, c));
        }
        acc
    }

    /// `A / W` for an ideal `W`, with the projection map.
    pub fn quotient(&self, w: &Subspace<F>) -> (FieldAlgebra<F>, LinearMap<F>) {
        let f = &self.field;
        let comp = w.complement();
        let k = comp.len();
        let proj = LinearMap {
            m: (0..self.dim).map(|i| w.quotient_coords(f, &self.basis(i))).collect(),
            out_dim: k,
        };
        let mut table = vec![vec![Vec::new(); k]; k];
        for a in 0..k {
            for b in 0..k {
                table[a][b] = w.quotient_coords(f, &self.table[comp[a]][comp[b]]);
            }
        }
        let one = w.quotient_coords(f, &self.one);
        (FieldAlgebra::new(f.clone(), table, one), proj)
    }

    /// The ideal generated by some elements.
    pub fn ideal_generated(&self, elems: &[Vec<F::El>]) -> Subspace<F> {
        let mut gens = Vec::new();
        for a in elems {
            gens.extend(self.mult_rows(a));
        }
        Subspace::new(&self.field, self.dim, gens)
    }

    pub fn ideal_product(&self, a: &Subspace<F>, b: &Subspace<F>) -> Subspace<F> {
        let mut gens = Vec::new();
        for x in &a.rows {
            for y in &b.rows {
                gens.push(self.mul(x, y));
            }
        }
        Subspace::new(&self.field, self.dim, gens)
    }

    /// Powers `N^1, N^2, ...` up to and including the first zero ideal.
    pub fn ideal_powers(&self, n: &Subspace<F>) -> Vec<Subspace<F>> {
        let mut out = vec![n.clone()];
        while out.last().unwrap().rank() > 0 {
            let next = self.ideal_product(out.last().unwrap(), n);
            out.push(next);
        }
        out
    }

    /// Splits a reduced algebra into its field factors. A random element
    /// is used in characteristic zero; in characteristic `p` the splitting
    /// comes from the fixed space of Frobenius.
    pub fn split_reduced(&self, rng: &mut dyn RngCore) -> Result<Vec<FieldComponent<F>>>
    where
        Self: SplitHelper<F>,
    {
        let f = &self.field;
        if self.dim == 0 {
            return Ok(Vec::new());
        }
        match self.separating_idempotents(rng)? {
            None => Ok(vec![FieldComponent {
                field: self.clone(),
                idempotent: self.one(),
                map: LinearMap::identity(f, self.dim),
            }]),
            Some(idems) => {
                let mut out = Vec::new();
                for e in idems {
                    let one_minus = self.sub(&self.one, &e);
                    let w = self.ideal_generated(&[one_minus]);
                    let (sub, proj) = self.quotient(&w);
                    for comp in sub.split_reduced(rng)? {
                        // lift the component idempotent back and cut it by e
                        let Some(lift) = proj.lift(f, &comp.idempotent) else {
                            return internal("idempotent lift failed");
                        };
                        out.push(FieldComponent {
                            field: comp.field,
                            idempotent: self.mul(&lift, &e),
                            map: proj.then(f, &comp.map),
                        });
                    }
                }
                Ok(out)
            }
        }
    }
}

/// Characteristic-specific pieces of the splitting algorithm.
pub trait SplitHelper<F: Field> {
    /// For a reduced algebra: `None` if it is a field, otherwise a complete
    /// set of orthogonal idempotents with at least two members.
    fn separating_idempotents(&self, rng: &mut dyn RngCore) -> Result<Option<Vec<Vec<F::El>>>>;
    fn nilradical(&self) -> Subspace<F>;
}

fn lagrange_idempotents<F: Field>(alg: &FieldAlgebra<F>, b: &[F::El], factors: &[UPoly<F::El>]) -> Vec<Vec<F::El>> {
    // CRT idempotents u_i(b) with u_i = 1 mod g_i and 0 mod g_j
    let f = &alg.field;
    let mu = factors.iter().fold(UPoly::one(f), |acc, g| acc.mul(f, g));
    factors
        .iter()
        .map(|g| {
            let co = mu.div_exact(f, g);
            let (_, s, _) = co.rem(f, g).xgcd(f, g);
            let u = s.mul(f, &co).rem(f, &mu);
            alg.eval_poly(&u, b)
        })
        .collect()
}

impl SplitHelper<Fp> for FieldAlgebra<Fp> {
    fn separating_idempotents(&self, rng: &mut dyn RngCore) -> Result<Option<Vec<Vec<u64>>>> {
        let f = &self.field;
        let frob = self.frobenius_matrix();
        let mut m = frob.clone();
        for (i, r) in m.iter_mut().enumerate() {
            r[i] = f.sub(&r[i], &1);
        }
        let fixed = left_kernel(f, &m, self.dim);
        if fixed.len() <= 1 {
            return Ok(None);
        }
        let ones = Subspace::new(f, self.dim, vec![self.one()]);
        let b = fixed.into_iter().find(|v| !ones.contains(f, v)).unwrap();
        let mu = self.minpoly(&b);
        let roots = roots_fp(f, &mu, rng);
        if roots.len() < 2 || roots.len() != mu.deg() {
            return internal("Frobenius-fixed element does not split");
        }
        let factors: Vec<UPoly<u64>> = roots.iter().map(|r| UPoly::from_coeffs(f, vec![f.neg(r), 1])).collect();
        Ok(Some(lagrange_idempotents(self, &b, &factors)))
    }

    fn nilradical(&self) -> Subspace<Fp> {
        let f = &self.field;
        let frob = self.frobenius_matrix();
        let mut m = frob.clone();
        let mut reach = f.p;
        while (reach as u128) < self.dim as u128 {
            m = mat_mul(f, &m, &frob, self.dim);
            reach = reach.saturating_mul(f.p);
        }
        Subspace::new(f, self.dim, left_kernel(f, &m, self.dim))
    }
}

impl FieldAlgebra<Fp> {
    /// Rows `b_i^p`; Frobenius is linear over the prime field.
    pub fn frobenius_matrix(&self) -> Mat<u64> {
        let p = BigUint::from(self.field.p);
        (0..self.dim).map(|i| self.pow(&self.basis(i), &p)).collect()
    }
}

impl SplitHelper<QQ> for FieldAlgebra<QQ> {
    fn separating_idempotents(&self, rng: &mut dyn RngCore) -> Result<Option<Vec<Vec<BigRational>>>> {
        let f = &self.field;
        if self.dim == 1 {
            return Ok(None);
        }
        let mut bound = 3i64;
        for attempt in 0..200 {
            let a: Vec<BigRational> = if attempt < self.dim {
                self.basis(attempt)
            } else {
                (0..self.dim).map(|_| f.from_i64(rng.gen_range(-bound..=bound))).collect()
            };
            if attempt % 20 == 19 {
                bound *= 2;
            }
            let mu = self.minpoly(&a);
            let factors = factor_q(&mu);
            if factors.iter().any(|(_, m)| *m > 1) {
                return internal("algebra over Q is not reduced");
            }
            if factors.len() > 1 {
                let gs: Vec<UPoly<BigRational>> = factors.into_iter().map(|(g, _)| g).collect();
                return Ok(Some(lagrange_idempotents(self, &a, &gs)));
            }
            if mu.deg() == self.dim {
                return Ok(None);
            }
        }
        internal("no separating element found")
    }

    fn nilradical(&self) -> Subspace<QQ> {
        let f = &self.field;
        let gram: Mat<BigRational> = (0..self.dim)
            .map(|i| (0..self.dim).map(|j| self.trace(&self.mul(&self.basis(i), &self.basis(j)))).collect())
            .collect();
        Subspace::new(f, self.dim, left_kernel(f, &gram, self.dim))
    }
}

/// Same modules and multiplication as `R`, tensored with a field: the
/// quotient of `F^n` by the image of the syzygies, and the map from
/// integer coordinates.
pub struct ScalarExtension<F: Field> {
    pub algebra: FieldAlgebra<F>,
    pub map: LinearMap<F>,
    /// Integer generator coordinates of the chosen basis elements.
    pub basis_coords: Vec<usize>,
}

pub fn extend_scalars<F: Field>(r: &ExplicitAlgebra, f: &F, conv: impl Fn(&BigInt) -> F::El) -> ScalarExtension<F> {
    let n = r.dim();
    let convv = |v: &[BigInt]| -> Vec<F::El> { v.iter().map(&conv).collect() };
    let w = Subspace::new(f, n, r.syzygies().basis().iter().map(|b| convv(b)).collect());
    let comp = w.complement();
    let k = comp.len();
    let mut table = vec![vec![Vec::new(); k]; k];
    for a in 0..k {
        for b in 0..k {
            table[a][b] = w.quotient_coords(f, &convv(r.structure_constant(comp[a], comp[b])));
        }
    }
    let one = w.quotient_coords(f, &convv(&r.one()));
    let map = LinearMap {
        m: (0..n)
            .map(|i| {
                let mut e = vec![f.zero(); n];
                e[i] = f.one();
                w.quotient_coords(f, &e)
            })
            .collect(),
        out_dim: k,
    };
    ScalarExtension { algebra: FieldAlgebra::new(f.clone(), table, one), map, basis_coords: comp }
}

/// `Q ⊗ R`.
pub fn rational_algebra(r: &ExplicitAlgebra) -> ScalarExtension<QQ> {
    extend_scalars(r, &QQ, |x| BigRational::from_integer(x.clone()))
}

/// `R / pR` as an algebra over `F_p`.
pub fn mod_p_algebra(r: &ExplicitAlgebra, p: u64) -> ScalarExtension<Fp> {
    let f = Fp::new(p);
    extend_scalars(r, &f, |x| f.reduce_big(x))
}

impl<F: Field> ScalarExtension<F> {
    pub fn image(&self, v: &[BigInt], conv: impl Fn(&BigInt) -> F::El) -> Vec<F::El> {
        let w: Vec<F::El> = v.iter().map(conv).collect();
        self.map.apply(&self.algebra.field, &w)
    }
}

/// Factor an irreducible-looking minimal polynomial over F_p; exposed for
/// residue-field bookkeeping.
pub fn fp_minpoly_is_irreducible(alg: &FieldAlgebra<Fp>, a: &[u64], rng: &mut dyn RngCore) -> bool {
    let mu = alg.minpoly(a);
    let fs = factor_fp(&alg.field, &mu, rng);
    fs.len() == 1 && fs[0].1 == 1
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::finitezalg::ExplicitAlgebra;
    use crate::poly::{parse_polynomial, Ideal, TermOrdering};
    use crate::{arith::ZZ, Context};
    use alloc::string::{String, ToString};
    use rand::SeedableRng;

    fn algebra(gens: &[&str], vars: &[&str]) -> ExplicitAlgebra {
        let n: Vec<String> = vars.iter().map(|s| s.to_string()).collect();
        let g = gens.iter().map(|s| parse_polynomial(s, &n, 1, 0).unwrap()).collect();
        ExplicitAlgebra::from_ideal(&Ideal::new(&ZZ, n.len(), TermOrdering::DegRevLex, g), &n, &Context::new(0)).unwrap()
    }

    #[test]
    fn rational_splitting_of_two_cyclotomic_copies() {
        let r = algebra(&["x^2+x+1", "y^2+y+1"], &["x", "y"]);
        let q = rational_algebra(&r);
        assert_eq!(q.algebra.dim(), 4);
        assert_eq!(q.algebra.nilradical().rank(), 0);
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(0);
        let comps = q.algebra.split_reduced(&mut rng).unwrap();
        assert_eq!(comps.len(), 2);
        let a = &q.algebra;
        let mut sum = a.zero();
        for c in &comps {
            assert_eq!(c.field.dim(), 2);
            assert_eq!(a.mul(&c.idempotent, &c.idempotent), c.idempotent);
            sum = a.add(&sum, &c.idempotent);
        }
        assert_eq!(sum, a.one());
    }

    #[test]
    fn mod_p_nilradical_and_berlekamp() {
        let r = algebra(&["x^3", "6*x^2", "y^2+y+1"], &["x", "y"]);
        let a2 = mod_p_algebra(&r, 2);
        let n = a2.algebra.nilradical();
        assert_eq!(a2.algebra.dim(), 6);
        assert_eq!(n.rank(), 4);
        assert_eq!(a2.algebra.ideal_powers(&n).len(), 3); // N, N^2, N^3 = 0
        let (red, _) = a2.algebra.quotient(&n);
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(0);
        assert_eq!(red.split_reduced(&mut rng).unwrap().len(), 1); // F_4
        let a7 = mod_p_algebra(&algebra(&["x^2+x+1"], &["x"]), 7);
        assert_eq!(a7.algebra.split_reduced(&mut rng).unwrap().len(), 2);
    }

    #[test]
    fn minimal_polynomial() {
        let r = algebra(&["x^2+x+1", "y^2+y+1"], &["x", "y"]);
        let q = rational_algebra(&r);
        let x = q.image(r.var_image(0), |c| BigRational::from_integer(c.clone()));
        let mu = q.algebra.minpoly(&x);
        assert_eq!(mu.display(&QQ, "t"), "t^2 + t + 1");
    }
}
