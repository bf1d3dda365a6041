//! The endomorphism extension `ρ: A^op → 𝓔 = End(_B A)` of a right depth
//! two extension: the `T`-action and `S`-coaction on `𝓔`, coinvariants, the
//! Galois map with its closed-form inverse and its factorization, induced
//! quasibases, and the corollaries for `E = End(A_B)`.

use serde::Serialize;

use crate::algebra::Algebra;
use crate::bialgebroid::{first_failure, pairs, singles, AxiomCheck, Bialgebroid};
use crate::comodule::{Coaction, GaloisMap};
use crate::depth2::{right_d2_quasibase, Quasibase};
use crate::duality::{build_s, build_t, sandwich_right};
use crate::error::{Error, Result};
use crate::extension::Extension;
use crate::hom::{HomSpace, Intertwine};
use crate::linalg::{rank, vec_ops, Matrix, Scalar, Subspace};
use crate::tensor;

/// `f ◁ t = t¹ f(t² −)` for `t` given as an ambient `A ⊗_K A` vector.
pub fn t_action(ext: &Extension, f: &Matrix, t: &[Scalar]) -> Matrix {
    sandwich_right(ext, t, f)
}

/// `ρ: A^op → 𝓔` as a validated extension.
pub fn endo_extension(ext: &Extension) -> Result<Extension> {
    Extension::new(ext.total().opposite(), ext.left_endo_algebra().clone(), ext.rho_map())
}

/// Everything built from one right quasibase of a right D2 extension.
#[derive(Debug)]
pub struct Tower<'a> {
    pub ext: &'a Extension,
    pub qb: Quasibase,
    pub s: Bialgebroid,
    pub coaction: Coaction,
    /// `S ↪ 𝓔` in coordinates.
    pub s_in_e: Matrix,
    // γ_j as maps and u_j as ambient tensors
    gammas: Vec<Matrix>,
    us: Vec<Vec<Scalar>>,
}

fn e_coords(ext: &Extension, f: &Matrix) -> Vec<Scalar> {
    ext.left_endos().coords(f).expect("map is left B-linear")
}

impl<'a> Tower<'a> {
    pub fn new(ext: &'a Extension) -> Result<Tower<'a>> {
        let qb = right_d2_quasibase(ext)
            .ok_or_else(|| Error::StageDependency { stage: "galois".into(), needs: "a right D2 extension".into() })?;
        Tower::with_quasibase(ext, qb)
    }

    pub fn with_quasibase(ext: &'a Extension, qb: Quasibase) -> Result<Tower<'a>> {
        let f = ext.field();
        let s = build_s(ext, &qb, None)?;
        let sp = ext.bimodule_endos();
        let ep = ext.left_endos();
        let s_in_e = Matrix::from_cols(f, ep.dim(), sp.maps().iter().map(|m| e_coords(ext, m)).collect());
        let gammas: Vec<Matrix> = qb.pairs.iter().map(|(g, _)| sp.combine(g)).collect();
        let us: Vec<Vec<Scalar>> = qb.pairs.iter().map(|(_, u)| ext.tee().to_ambient(u)).collect();
        let images: Vec<Vec<Scalar>> = ep
            .maps()
            .iter()
            .map(|fm| {
                let mut acc = vec_ops::zeros(f, sp.dim() * ep.dim());
                for ((g, _), u) in qb.pairs.iter().zip(&us) {
                    let moved = e_coords(ext, &t_action(ext, fm, u));
                    acc = vec_ops::add(&acc, &vec_ops::outer(g, &moved));
                }
                acc
            })
            .collect();
        let a = ext.total();
        let r = ext.centralizer();
        let base_map = Matrix::from_cols(
            f,
            ep.dim(),
            (0..r.algebra.dim()).map(|k| e_coords(ext, &a.left_mul_matrix(&r.inclusion.col(k)))).collect(),
        );
        let coaction = Coaction::from_ambient(s.clone(), ext.left_endo_algebra().clone(), base_map, &images)?;
        Ok(Tower { ext, qb, s, coaction, s_in_e, gammas, us })
    }

    pub fn e_algebra(&self) -> &Algebra {
        &self.coaction.carrier
    }

    fn dim_e(&self) -> usize {
        self.e_algebra().dim()
    }

    /// `ρ(A)` as a subspace of `𝓔`.
    pub fn rho_image(&self) -> Subspace {
        let rho = self.ext.rho_map();
        Subspace::span(self.ext.field(), self.dim_e(), (0..rho.cols()).map(|i| rho.col(i)))
    }

    /// `ϱ(α) = Δ_S(α)` for `α ∈ S ⊆ 𝓔`, and `ρ(A)` is exactly the
    /// coinvariant subalgebra.
    pub fn coaction_checks(&self) -> Vec<AxiomCheck> {
        let ds = self.s.dim();
        let restricts = first_failure(singles(ds), |i| {
            let lhs = self.coaction.delta.mul_vec(&self.s_in_e.col(i[0]));
            let moved = tensor::apply_second(&self.s_in_e, ds, &self.s.comult_rep(i[0]));
            lhs == self.coaction.tensor.project(&moved)
        });
        let co = self.coaction.coinvariants();
        let rho = self.rho_image();
        vec![
            AxiomCheck::new("coaction restricted to S is the comultiplication", restricts),
            AxiomCheck::new(
                "coinvariants are the right multiplications",
                (co != rho).then(|| format!("coinvariants have dim {}, ρ(A) has dim {}", co.dim(), rho.dim())),
            ),
        ]
    }
}

/// The Galois map of `ϱ` with both certifications of bijectivity.
#[derive(Clone, Debug)]
pub struct TowerGalois {
    pub coinvariants: Subspace,
    pub map: GaloisMap,
    /// `β⁻¹(α ⊗ h) = Σ_j α(− u_j¹) h(u_j²) ⊗ γ_j` on quotient coordinates.
    pub closed_inverse: Matrix,
}

#[derive(Clone, Debug, Serialize)]
pub struct GaloisSummary {
    pub dim_domain: usize,
    pub dim_codomain: usize,
    pub bijective: bool,
    pub closed_form_is_inverse: bool,
    pub dim_coinvariants: usize,
}

impl TowerGalois {
    pub fn summary(&self) -> GaloisSummary {
        let m = &self.map.matrix;
        let inv = &self.closed_inverse;
        let two_sided = m.is_square()
            && m.mul(inv) == Matrix::identity(m.field(), m.rows())
            && inv.mul(m) == Matrix::identity(m.field(), m.cols());
        GaloisSummary {
            dim_domain: m.cols(),
            dim_codomain: m.rows(),
            bijective: self.map.is_bijective(),
            closed_form_is_inverse: two_sided,
            dim_coinvariants: self.coinvariants.dim(),
        }
    }
}

impl Tower<'_> {
    /// `x ↦ α(x u¹) h(u²)` for an ambient tensor `u`.
    fn inverse_factor(&self, alpha: &Matrix, h: &Matrix, u: &[Scalar]) -> Matrix {
        let a = self.ext.total();
        let n = self.ext.n();
        let mut acc = Matrix::zeros(self.ext.field(), n, n);
        for (k, l, c) in tensor::terms(n, u) {
            let right = a.right_mul_matrix(&h.col(l));
            acc = acc.add(&right.mul(alpha).mul(&a.right_basis_ops()[k]).scale(c));
        }
        acc
    }

    /// Closed-form inverse on an ambient `S ⊗_K 𝓔` basis vector, as an
    /// ambient `𝓔 ⊗_K 𝓔` vector.
    fn closed_inverse_ambient(&self, alpha: &Matrix, h: &Matrix) -> Vec<Scalar> {
        let de = self.dim_e();
        let mut acc = vec_ops::zeros(self.ext.field(), de * de);
        for (g, u) in self.gammas.iter().zip(&self.us) {
            let left = e_coords(self.ext, &self.inverse_factor(alpha, h, u));
            acc = vec_ops::add(&acc, &vec_ops::outer(&left, &e_coords(self.ext, g)));
        }
        acc
    }

    pub fn galois(&self) -> Result<TowerGalois> {
        let coinvariants = self.coaction.coinvariants();
        let map = self.coaction.galois_map(&coinvariants)?;
        let sp = self.ext.bimodule_endos();
        let ep = self.ext.left_endos();
        let de = self.dim_e();
        let codomain = &self.coaction.tensor;
        let cols = (0..codomain.dim())
            .map(|q| {
                let idx = codomain.section_index(q);
                let amb = self.closed_inverse_ambient(&sp.map(idx / de), &ep.map(idx % de));
                map.domain.project(&amb)
            })
            .collect();
        let closed_inverse = Matrix::from_cols(self.ext.field(), map.domain.dim(), cols);
        Ok(TowerGalois { coinvariants, map, closed_inverse })
    }

    /// `f ◁ 1 = f`, `ρ(a) ◁ t = λ(t¹t²) ρ(a)`, `(f ◁ t) ◁ t′ = f ◁ tt′` and
    /// the measuring identity `(fg) ◁ t = (f ◁ t₍₁₎)(g ◁ t₍₂₎)`, on basis
    /// elements, as operators on `A`.
    pub fn action_checks(&self) -> Result<Vec<AxiomCheck>> {
        let ext = self.ext;
        let f = ext.field();
        let a = ext.total();
        let tee = ext.tee();
        let emaps = ext.left_endos().maps();
        let t_bi = build_t(ext, &self.qb, None)?;
        let (de, dt, n) = (self.dim_e(), tee.dim(), ext.n());
        let reps: Vec<Vec<Scalar>> = (0..dt).map(|i| tee.to_ambient(&tee.algebra.basis_vector(i))).collect();
        let acted: Vec<Vec<Matrix>> = emaps.iter().map(|m| reps.iter().map(|u| t_action(ext, m, u)).collect()).collect();
        // f_i ◁ t for t in T-coordinates
        let act = |i: usize, t: &[Scalar]| -> Matrix {
            let mut acc = Matrix::zeros(f, n, n);
            for (z, c) in t.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
                acc = acc.add(&acted[i][z].scale(c));
            }
            acc
        };
        let unit_law = first_failure(singles(de), |i| act(i[0], tee.algebra.unit()) == emaps[i[0]]);
        let invariants = first_failure(pairs(n, dt), |p| {
            let rho_a = a.right_basis_ops()[p[0]].clone();
            let counit = a.left_mul_matrix(&ext.multiply_tensor(&reps[p[1]]));
            t_action(ext, &rho_a, &reps[p[1]]) == counit.mul(&rho_a)
        });
        let module = first_failure((0..de).flat_map(|i| pairs(dt, dt).map(move |p| vec![i, p[0], p[1]])), |c| {
            let twice = t_action(ext, &acted[c[0]][c[1]], &reps[c[2]]);
            twice == act(c[0], tee.algebra.basis_product(c[1], c[2]))
        });
        // Δ_T(t) terms as (k, l, coefficient) in T-coordinates
        let comult: Vec<Vec<(usize, usize, Scalar)>> =
            (0..dt).map(|t| tensor::terms(dt, &t_bi.comult_rep(t)).map(|(k, l, c)| (k, l, c.clone())).collect()).collect();
        let measuring = first_failure((0..de).flat_map(|i| pairs(de, dt).map(move |p| vec![i, p[0], p[1]])), |c| {
            let (i, j, t) = (c[0], c[1], c[2]);
            let lhs = t_action(ext, &emaps[i].mul(&emaps[j]), &reps[t]);
            let mut rhs = Matrix::zeros(f, n, n);
            for (k, l, x) in &comult[t] {
                rhs = rhs.add(&acted[i][*k].mul(&acted[j][*l]).scale(x));
            }
            lhs == rhs
        });
        Ok(vec![
            AxiomCheck::new("unit of T acts trivially", unit_law),
            AxiomCheck::new("right multiplications are invariant", invariants),
            AxiomCheck::new("action is a right T-module", module),
            AxiomCheck::new("action is measuring", measuring),
        ])
    }
}

/// Dimensions and bijectivity of each arrow in the factorization
/// `𝓔 ⊗_{ρ(A)} 𝓔 → 𝓔 ⊗_A 𝓔 → Hom(_B Hom(𝓔_A, A_A), _B A) → Hom(_B A ⊗_B A, _B A)`
/// and of the identification `S ⊗_R 𝓔 → Hom(_B A ⊗_B A, _B A)`.
#[derive(Clone, Debug, Serialize)]
pub struct Factorization {
    pub dim_e_tensor_rho: usize,
    pub dim_e_tensor_a: usize,
    pub dim_dual_of_e: usize,
    pub dim_hom_of_dual: usize,
    pub dim_hom_of_tensor: usize,
    pub dim_s_tensor_e: usize,
    pub flip_bijective: bool,
    pub dual_basis_map_bijective: bool,
    pub psi_bijective: bool,
    pub identification_bijective: bool,
    pub composite_equals_galois_map: bool,
}

fn bijective(m: &Matrix) -> bool {
    m.is_square() && rank(m) == m.rows()
}

impl Tower<'_> {
    /// `Hom(_B A ⊗_B A, _B A)` as maps from quotient coordinates to `A`.
    fn hom_of_tensor(&self) -> HomSpace {
        let ext = self.ext;
        let n = ext.n();
        let q = ext.tensor();
        let c: Vec<Intertwine> = ext
            .left_b_ops()
            .iter()
            .map(|l| {
                let on_tensor = q.induced_map(|i| tensor::apply_first(l, n, &vec_ops::unit(ext.field(), n * n, i)));
                Intertwine::new(on_tensor, l.clone())
            })
            .collect();
        HomSpace::intertwiners(ext.field(), q.dim(), n, &c)
    }

    /// `a ⊗ a′ ↦ x(a) y(a′)` on quotient coordinates.
    fn pointwise_product(&self, x: &Matrix, y: &Matrix) -> Matrix {
        let ext = self.ext;
        let n = ext.n();
        let a = ext.total();
        let q = ext.tensor();
        let cols = (0..q.dim())
            .map(|i| {
                let idx = q.section_index(i);
                a.mul_coords(&x.col(idx / n), &y.col(idx % n))
            })
            .collect();
        Matrix::from_cols(ext.field(), n, cols)
    }

    /// `α ⊗ f ↦ (a ⊗ a′ ↦ α(a) f(a′))`.
    fn identification(&self, target: &HomSpace) -> Matrix {
        let ext = self.ext;
        let sp = ext.bimodule_endos();
        let ep = ext.left_endos();
        let de = self.dim_e();
        let dom = &self.coaction.tensor;
        let cols = (0..dom.dim())
            .map(|i| {
                let idx = dom.section_index(i);
                let m = self.pointwise_product(&sp.map(idx / de), &ep.map(idx % de));
                target.coords(&m).expect("image is left B-linear")
            })
            .collect();
        Matrix::from_cols(ext.field(), target.dim(), cols)
    }

    pub fn factorization(&self, galois: &TowerGalois) -> Factorization {
        let ext = self.ext;
        let fld = ext.field();
        let n = ext.n();
        let a = ext.total();
        let e_alg = self.e_algebra();
        let emaps = ext.left_endos().maps();
        let de = self.dim_e();
        let rho = ext.rho_map();
        let x1 = &galois.map.domain;
        // 𝓔 ⊗_A 𝓔 with (ρ(a)∘g) ⊗ f = g ⊗ (f∘ρ(a))
        let lefts: Vec<Matrix> = (0..n).map(|i| e_alg.left_mul_matrix(&rho.col(i))).collect();
        let rights: Vec<Matrix> = (0..n).map(|i| e_alg.right_mul_matrix(&rho.col(i))).collect();
        let x2 = crate::linalg::tensor_quotient(fld, de, &lefts, de, &rights);
        let flip = Matrix::from_cols(
            fld,
            x2.dim(),
            (0..x1.dim()).map(|i| x2.project(&tensor::flip(de, de, &vec_ops::unit(fld, de * de, x1.section_index(i))))).collect(),
        );
        // Hom(𝓔_A, A_A) with g·a = ρ(a)∘g
        let dual_c: Vec<Intertwine> =
            lefts.iter().zip(a.right_basis_ops()).map(|(l, r)| Intertwine::new(l.clone(), r.clone())).collect();
        let dual = HomSpace::intertwiners(fld, de, n, &dual_c);
        let dual_b: Vec<Intertwine> = ext
            .left_b_ops()
            .iter()
            .map(|l| {
                let cols = (0..dual.dim()).map(|i| dual.coords(&l.mul(&dual.map(i))).expect("B acts on the dual")).collect();
                Intertwine::new(Matrix::from_cols(fld, dual.dim(), cols), l.clone())
            })
            .collect();
        let x3 = HomSpace::intertwiners(fld, dual.dim(), n, &dual_b);
        let nus = dual.maps();
        // g ⊗ f ↦ (ν ↦ f(ν(g)))
        let mull = Matrix::from_cols(
            fld,
            x3.dim(),
            (0..x2.dim())
                .map(|i| {
                    let idx = x2.section_index(i);
                    let (g, fm) = (e_alg.basis_vector(idx / de), &emaps[idx % de]);
                    let m = Matrix::from_cols(fld, n, nus.iter().map(|nu| fm.mul_vec(&nu.mul_vec(&g))).collect());
                    x3.coords(&m).expect("image is left B-linear")
                })
                .collect(),
        );
        // Ψ(a ⊗ a′)(f) = a f(a′)
        let q = ext.tensor();
        let psi = Matrix::from_cols(
            fld,
            dual.dim(),
            (0..q.dim())
                .map(|i| {
                    let idx = q.section_index(i);
                    let left = &a.left_basis_ops()[idx / n];
                    let m = Matrix::from_cols(fld, n, emaps.iter().map(|fm| left.mul_vec(&fm.col(idx % n))).collect());
                    dual.coords(&m).expect("Ψ lands in the right A-dual")
                })
                .collect(),
        );
        let x4 = self.hom_of_tensor();
        let compose_psi = Matrix::from_cols(
            fld,
            x4.dim(),
            (0..x3.dim()).map(|i| x4.coords(&x3.map(i).mul(&psi)).expect("composite is left B-linear")).collect(),
        );
        let ident = self.identification(&x4);
        let composite = compose_psi.mul(&mull).mul(&flip);
        Factorization {
            dim_e_tensor_rho: x1.dim(),
            dim_e_tensor_a: x2.dim(),
            dim_dual_of_e: dual.dim(),
            dim_hom_of_dual: x3.dim(),
            dim_hom_of_tensor: x4.dim(),
            dim_s_tensor_e: self.coaction.tensor.dim(),
            flip_bijective: bijective(&flip),
            dual_basis_map_bijective: bijective(&mull),
            psi_bijective: bijective(&psi),
            identification_bijective: bijective(&ident),
            composite_equals_galois_map: composite == ident.mul(&galois.map.matrix),
        }
    }
}

/// The left quasibase of `𝓔 | A^op` induced by the right quasibase of `A | B`.
#[derive(Clone, Debug)]
pub struct EndoQuasibase {
    pub endo: Extension,
    pub quasibase: Quasibase,
    /// `Σ_j T_j 𝓑_j(f) = f ⊗ 1` on every `𝓔`-basis element.
    pub essential_identity: bool,
}

impl Tower<'_> {
    /// `T_j = β⁻¹(γ_j ⊗ id)` and `𝓑_j = − ◁ u_j`, re-expressed in the
    /// coordinates of the endomorphism extension.
    pub fn endo_quasibase(&self, galois: &TowerGalois) -> Result<EndoQuasibase> {
        let ext = self.ext;
        let fld = ext.field();
        let endo = endo_extension(ext)?;
        let e_alg = self.e_algebra();
        let de = self.dim_e();
        let x1 = &galois.map.domain;
        let id = Matrix::identity(fld, ext.n());
        let ts: Vec<Vec<Scalar>> = self.gammas.iter().map(|g| self.closed_inverse_ambient(g, &id)).collect();
        let bs: Vec<Matrix> = self
            .us
            .iter()
            .map(|u| {
                let cols = ext.left_endos().maps().iter().map(|f| e_coords(ext, &t_action(ext, f, u))).collect();
                Matrix::from_cols(fld, de, cols)
            })
            .collect();
        let essential_identity = (0..de).all(|i| {
            let mut acc = vec_ops::zeros(fld, de * de);
            for (t, b) in ts.iter().zip(&bs) {
                let moved = tensor::apply_second(&e_alg.right_mul_matrix(&b.col(i)), de, t);
                acc = vec_ops::add(&acc, &moved);
            }
            let target = vec_ops::outer(&e_alg.basis_vector(i), e_alg.unit());
            x1.is_zero(&vec_ops::sub(&acc, &target))
        });
        let mut pairs = Vec::with_capacity(ts.len());
        for (t, b) in ts.iter().zip(&bs) {
            let s_coords = endo
                .bimodule_endos()
                .coords(b)
                .ok_or_else(|| Error::AxiomFailure { axiom: "induced quasibase".into(), witness: "𝓑_j is not ρ(A)-bilinear".into() })?;
            let t_coords = endo
                .tee()
                .coords(&endo, t)
                .ok_or_else(|| Error::NotInT("T_j is not ρ(A)-central".into()))?;
            pairs.push((s_coords, t_coords));
        }
        let quasibase = Quasibase { side: crate::properties::Side::Left, pairs };
        Ok(EndoQuasibase { endo, quasibase, essential_identity })
    }
}

/// `(𝓔 ⊗_{ρ(A)} 𝓔)^{ρ(A)} → S`, `T¹ ⊗ T² ↦ T¹(− T²(1))`, the restriction of
/// the Galois map.
#[derive(Clone, Debug, Serialize)]
pub struct RestrictedGalois {
    pub dim_invariants: usize,
    pub dim_s: usize,
    pub agrees_with_galois_map: bool,
    pub bijective: bool,
    /// multiplicative for the opposite of the invariant tensor product
    pub anti_multiplicative: bool,
    pub unital: bool,
    pub counit_compatible: bool,
    pub source_target_compatible: bool,
}

impl Tower<'_> {
    fn restrict(&self, t: &[Scalar]) -> Matrix {
        let ext = self.ext;
        let a = ext.total();
        let emaps = ext.left_endos().maps();
        let mut acc = Matrix::zeros(ext.field(), ext.n(), ext.n());
        for (k, l, c) in tensor::terms(self.dim_e(), t) {
            acc = acc.add(&emaps[k].mul(&a.right_mul_matrix(&emaps[l].mul_vec(a.unit()))).scale(c));
        }
        acc
    }

    pub fn restricted_galois(&self, galois: &TowerGalois, endo: &Extension) -> RestrictedGalois {
        let ext = self.ext;
        let fld = ext.field();
        let a = ext.total();
        let sp = ext.bimodule_endos();
        let ep = ext.left_endos();
        let tee = endo.tee();
        let dt = tee.dim();
        let maps: Vec<Matrix> = tee.reps.iter().map(|t| self.restrict(t)).collect();
        let coords: Vec<Option<Vec<Scalar>>> = maps.iter().map(|m| sp.coords(m)).collect();
        let in_s = coords.iter().all(Option::is_some);
        let id_e = e_coords(ext, &Matrix::identity(fld, ext.n()));
        let agrees = in_s
            && tee.reps.iter().zip(&coords).all(|(t, c)| {
                let via_beta = galois.map.matrix.mul_vec(&galois.map.domain.project(t));
                let direct = self.coaction.tensor.project(&vec_ops::outer(c.as_ref().unwrap(), &id_e));
                via_beta == direct
            });
        let phi = |x: &[Scalar]| -> Matrix {
            let mut acc = Matrix::zeros(fld, ext.n(), ext.n());
            for (i, c) in x.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
                acc = acc.add(&maps[i].scale(c));
            }
            acc
        };
        let bijective = in_s && {
            let m = Matrix::from_cols(fld, sp.dim(), coords.iter().map(|c| c.clone().unwrap()).collect());
            m.is_square() && rank(&m) == sp.dim()
        };
        let anti_multiplicative =
            (0..dt).all(|i| (0..dt).all(|j| phi(tee.algebra.basis_product(i, j)) == maps[j].mul(&maps[i])));
        let unital = phi(tee.algebra.unit()) == Matrix::identity(fld, ext.n());
        // ε_T′(T) = T¹ ∘ T² lies in End(_B A_A) ≅ R via f ↦ f(1)
        let counit_compatible = tee.reps.iter().zip(&maps).all(|(t, m)| {
            let mut prod = vec_ops::zeros(fld, ext.n());
            for (k, l, c) in tensor::terms(self.dim_e(), t) {
                vec_ops::axpy(&mut prod, c, &ep.map(k).mul(&ep.map(l)).mul_vec(a.unit()));
            }
            prod == m.mul_vec(a.unit())
        });
        let r = ext.centralizer();
        let source_target_compatible = (0..r.algebra.dim()).all(|k| {
            let x = r.inclusion.col(k);
            let lam = e_coords(ext, &a.left_mul_matrix(&x));
            let right = self.restrict(&vec_ops::outer(&id_e, &lam));
            let left = self.restrict(&vec_ops::outer(&lam, &id_e));
            right == a.right_mul_matrix(&x) && left == a.left_mul_matrix(&x)
        });
        RestrictedGalois {
            dim_invariants: dt,
            dim_s: sp.dim(),
            agrees_with_galois_map: agrees,
            bijective,
            anti_multiplicative,
            unital,
            counit_compatible,
            source_target_compatible,
        }
    }
}
