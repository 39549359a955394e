//! Verifiers for the identity families relating `A`, `A*`, the end
//! idempotents `E_0, E_d, E*_0, E*_d` and the split sequences, and for the
//! trace formulas recovering `φ` and `φ̂` from the projectors `F_k`.
//!
//! Each family is listed as a table of its members; a check id carries the
//! family, the member label and the index, e.g. `split-relation/relD/i=2`.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::error::Result;
use crate::field::Scalar;
use crate::leonard::{D4Element, LeonardModel};
use crate::linalg::Matrix;
use crate::poly::RootSequence;
use crate::report::Check;
use crate::units::f_projector;

#[derive(Clone, Copy, Debug)]
enum Seq {
    Theta,
    ThetaStar,
}

#[derive(Clone, Copy, Debug)]
enum Kind {
    Tau,
    Eta,
}

#[derive(Clone, Copy, Debug)]
enum Idem {
    E0,
    Ed,
    Es0,
    Esd,
}

/// Which partial product of a split sequence scales the right side.
#[derive(Clone, Copy, Debug)]
enum Coeff {
    /// `φ_1 ... φ_i`
    VarphiFirst,
    /// `φ_d ... φ_{d-i+1}`
    VarphiLast,
    /// `φ̂_1 ... φ̂_i`
    PhiFirst,
    /// `φ̂_d ... φ̂_{d-i+1}`
    PhiLast,
}

/// `poly_i(X) P Q = coeff_i / denom · poly'_{d-i}(Y) R`, where `poly'` is
/// the polynomial family whose value at its anchor root is `denom`.
struct Relation {
    label: &'static str,
    poly: (Seq, Kind),
    p: Idem,
    q: Idem,
    coeff: Coeff,
    other: (Seq, Kind),
    r: Idem,
}

const RELATIONS: [Relation; 8] = [
    rel("rel1", (Seq::Theta, Kind::Eta), Idem::Es0, Idem::E0, Coeff::PhiFirst, (Seq::ThetaStar, Kind::Eta), Idem::E0),
    rel("reld", (Seq::Theta, Kind::Eta), Idem::Esd, Idem::E0, Coeff::VarphiLast, (Seq::ThetaStar, Kind::Tau), Idem::E0),
    rel(
        "relD",
        (Seq::Theta, Kind::Tau),
        Idem::Es0,
        Idem::Ed,
        Coeff::VarphiFirst,
        (Seq::ThetaStar, Kind::Eta),
        Idem::Ed,
    ),
    rel("reldD", (Seq::Theta, Kind::Tau), Idem::Esd, Idem::Ed, Coeff::PhiLast, (Seq::ThetaStar, Kind::Tau), Idem::Ed),
    rel("rels", (Seq::ThetaStar, Kind::Eta), Idem::E0, Idem::Es0, Coeff::PhiLast, (Seq::Theta, Kind::Eta), Idem::Es0),
    rel(
        "relds",
        (Seq::ThetaStar, Kind::Eta),
        Idem::Ed,
        Idem::Es0,
        Coeff::VarphiLast,
        (Seq::Theta, Kind::Tau),
        Idem::Es0,
    ),
    rel(
        "relDs",
        (Seq::ThetaStar, Kind::Tau),
        Idem::E0,
        Idem::Esd,
        Coeff::VarphiFirst,
        (Seq::Theta, Kind::Eta),
        Idem::Esd,
    ),
    rel(
        "reldDs",
        (Seq::ThetaStar, Kind::Tau),
        Idem::Ed,
        Idem::Esd,
        Coeff::PhiFirst,
        (Seq::Theta, Kind::Tau),
        Idem::Esd,
    ),
];

const fn rel(
    label: &'static str,
    poly: (Seq, Kind),
    p: Idem,
    q: Idem,
    coeff: Coeff,
    other: (Seq, Kind),
    r: Idem,
) -> Relation {
    Relation { label, poly, p, q, coeff, other, r }
}

/// `W X Y Z = (prod / (denom_1 denom_2)) · U V`, where `prod` is the full
/// product of `φ` or of `φ̂`.
struct FourProduct {
    label: &'static str,
    lhs: [Idem; 4],
    varphi: bool,
    denoms: [(Seq, Kind); 2],
    rhs: [Idem; 2],
}

const FOUR_PRODUCTS: [FourProduct; 8] = {
    use Idem::*;
    use Kind::*;
    use Seq::*;
    [
        FourProduct {
            label: "E0EsdEdEs0",
            lhs: [E0, Esd, Ed, Es0],
            varphi: true,
            denoms: [(Theta, Tau), (ThetaStar, Tau)],
            rhs: [E0, Es0],
        },
        FourProduct {
            label: "E0Es0EdEsd",
            lhs: [E0, Es0, Ed, Esd],
            varphi: false,
            denoms: [(Theta, Tau), (ThetaStar, Eta)],
            rhs: [E0, Esd],
        },
        FourProduct {
            label: "EdEsdE0Es0",
            lhs: [Ed, Esd, E0, Es0],
            varphi: false,
            denoms: [(Theta, Eta), (ThetaStar, Tau)],
            rhs: [Ed, Es0],
        },
        FourProduct {
            label: "EdEs0E0Esd",
            lhs: [Ed, Es0, E0, Esd],
            varphi: true,
            denoms: [(Theta, Eta), (ThetaStar, Eta)],
            rhs: [Ed, Esd],
        },
        FourProduct {
            label: "Es0EdEsdE0",
            lhs: [Es0, Ed, Esd, E0],
            varphi: true,
            denoms: [(Theta, Tau), (ThetaStar, Tau)],
            rhs: [Es0, E0],
        },
        FourProduct {
            label: "Es0E0EsdEd",
            lhs: [Es0, E0, Esd, Ed],
            varphi: false,
            denoms: [(Theta, Eta), (ThetaStar, Tau)],
            rhs: [Es0, Ed],
        },
        FourProduct {
            label: "EsdEdEs0E0",
            lhs: [Esd, Ed, Es0, E0],
            varphi: false,
            denoms: [(Theta, Tau), (ThetaStar, Eta)],
            rhs: [Esd, E0],
        },
        FourProduct {
            label: "EsdE0Es0Ed",
            lhs: [Esd, E0, Es0, Ed],
            varphi: true,
            denoms: [(Theta, Eta), (ThetaStar, Eta)],
            rhs: [Esd, Ed],
        },
    ]
};

struct Ctx<'a> {
    m: &'a LeonardModel,
    theta: RootSequence,
    theta_star: RootSequence,
}

impl<'a> Ctx<'a> {
    fn new(m: &'a LeonardModel) -> Self {
        Ctx { m, theta: m.system().theta_seq(), theta_star: m.system().theta_star_seq() }
    }

    fn d(&self) -> usize {
        self.m.d()
    }

    fn seq(&self, s: Seq) -> &RootSequence {
        match s {
            Seq::Theta => &self.theta,
            Seq::ThetaStar => &self.theta_star,
        }
    }

    /// `τ_i(A)`, `η*_i(A*)` and so on.
    fn poly_at(&self, (s, k): (Seq, Kind), i: usize) -> Result<Matrix> {
        let seq = self.seq(s);
        let p = match k {
            Kind::Tau => seq.tau(i)?,
            Kind::Eta => seq.eta(i)?,
        };
        let x = match s {
            Seq::Theta => self.m.a(),
            Seq::ThetaStar => self.m.a_star(),
        };
        Ok(p.eval_matrix(x))
    }

    /// `τ_d(θ_d)` or `η_d(θ_0)` (starred alike): the one root where the
    /// degree-`d` polynomial does not vanish.
    fn denom(&self, (s, k): (Seq, Kind)) -> Result<Scalar> {
        let seq = self.seq(s);
        let d = self.d();
        Ok(match k {
            Kind::Tau => seq.tau(d)?.eval(&seq.roots()[d]),
            Kind::Eta => seq.eta(d)?.eval(&seq.roots()[0]),
        })
    }

    fn idem(&self, e: Idem) -> &Matrix {
        match e {
            Idem::E0 => self.m.e(0),
            Idem::Ed => self.m.e(self.d()),
            Idem::Es0 => self.m.e_star(0),
            Idem::Esd => self.m.e_star(self.d()),
        }
    }

    fn coeff(&self, c: Coeff, i: usize) -> Scalar {
        let d = self.d();
        let one = self.m.field().one();
        match c {
            Coeff::VarphiFirst => (1..=i).fold(one, |acc, k| &acc * self.m.varphi(k)),
            Coeff::VarphiLast => (d - i + 1..=d).fold(one, |acc, k| &acc * self.m.varphi(k)),
            Coeff::PhiFirst => (1..=i).fold(one, |acc, k| &acc * self.m.phi(k)),
            Coeff::PhiLast => (d - i + 1..=d).fold(one, |acc, k| &acc * self.m.phi(k)),
        }
    }

    /// `(poly_i(X), P Q, c · poly'_{d-i}(Y), R)` for one member at index `i`.
    fn relation_parts(&self, r: &Relation, i: usize) -> Result<(Matrix, Matrix, Matrix, Matrix)> {
        let c = self.coeff(r.coeff, i).checked_div(&self.denom(r.other)?)?;
        Ok((
            self.poly_at(r.poly, i)?,
            self.idem(r.p) * self.idem(r.q),
            self.poly_at(r.other, self.d() - i)?.scale(&c),
            self.idem(r.r).clone(),
        ))
    }
}

/// The eight one-parameter families
/// `η_i(A) E*_0 E_0 = (φ̂_1 ... φ̂_i / η*_d(θ*_0)) η*_{d-i}(A*) E_0` and its
/// relatives, for `0 ≤ i ≤ d`: `8(d+1)` checks.
pub fn verify_split_relations(model: &LeonardModel) -> Result<Vec<Check>> {
    let ctx = Ctx::new(model);
    let mut checks = Vec::with_capacity(8 * (ctx.d() + 1));
    for r in &RELATIONS {
        for i in 0..=ctx.d() {
            let (poly, pq, rhs_poly, e) = ctx.relation_parts(r, i)?;
            checks.push(Check::matrices(
                format!("split-relation/{}/i={i}", r.label),
                &(&poly * &pq),
                &(&rhs_poly * &e),
            ));
        }
    }
    Ok(checks)
}

/// The mirrored families `E_0 E*_0 η_i(A) = (...) E_0 η*_{d-i}(A*)` and so
/// on (`8(d+1)` checks), plus one check per member and index that the
/// antiautomorphism carries each side of the unmirrored identity to the
/// matching side of the mirrored one.
pub fn verify_split_relations_anti(model: &LeonardModel) -> Result<Vec<Check>> {
    let ctx = Ctx::new(model);
    let dagger = model.dagger();
    let mut checks = Vec::with_capacity(16 * (ctx.d() + 1));
    let mut cross = Vec::with_capacity(8 * (ctx.d() + 1));
    for r in &RELATIONS {
        for i in 0..=ctx.d() {
            let (poly, pq, rhs_poly, e) = ctx.relation_parts(r, i)?;
            let qp = ctx.idem(r.q) * ctx.idem(r.p);
            let lhs = &qp * &poly;
            let rhs = &e * &rhs_poly;
            checks.push(Check::matrices(format!("split-relation-anti/{}anti/i={i}", r.label), &lhs, &rhs));

            let id = format!("split-relation-anti/dagger/{}/i={i}", r.label);
            let lhs_ok = dagger.apply(&(&poly * &pq)) == lhs;
            let rhs_ok = dagger.apply(&(&rhs_poly * &e)) == rhs;
            cross.push(Check::from_bool(id, lhs_ok && rhs_ok, || {
                String::from(if lhs_ok { "dagger of right side differs" } else { "dagger of left side differs" })
            }));
        }
    }
    checks.extend(cross);
    Ok(checks)
}

/// `E_0 E*_d E_d E*_0 = (φ_1 ... φ_d / (τ_d(θ_d) τ*_d(θ*_d))) E_0 E*_0` and
/// the other seven four-fold products: 8 checks.
pub fn verify_four_idempotent_products(model: &LeonardModel) -> Result<Vec<Check>> {
    let ctx = Ctx::new(model);
    let d = ctx.d();
    let mut checks = Vec::with_capacity(8);
    for f in &FOUR_PRODUCTS {
        let num = ctx.coeff(if f.varphi { Coeff::VarphiFirst } else { Coeff::PhiFirst }, d);
        let den = &ctx.denom(f.denoms[0])? * &ctx.denom(f.denoms[1])?;
        let c = num.checked_div(&den)?;
        let [w, x, y, z] = f.lhs.map(|e| ctx.idem(e));
        let lhs = &(&(w * x) * y) * z;
        let rhs = (ctx.idem(f.rhs[0]) * ctx.idem(f.rhs[1])).scale(&c);
        checks.push(Check::matrices(format!("four-idempotent/{}", f.label), &lhs, &rhs));
    }
    Ok(checks)
}

fn commutator(model: &LeonardModel) -> Matrix {
    &(model.a() * model.a_star()) - &(model.a_star() * model.a())
}

/// `tr((AA* - A*A) F_k) = φ_k - φ_{k+1}` with `φ_0 = φ_{d+1} = 0`, for
/// `0 ≤ k ≤ d`, and the telescoped sum `Σ_k tr((AA* - A*A) F_k) = 0`.
pub fn verify_commutator_traces(model: &LeonardModel) -> Result<Vec<Check>> {
    let d = model.d();
    let field = model.field();
    let c = commutator(model);
    let varphi = |k: usize| if k == 0 || k > d { field.zero() } else { model.varphi(k).clone() };
    let mut checks = Vec::with_capacity(d + 2);
    let mut total = field.zero();
    for k in 0..=d {
        let t = (&c * &f_projector(model, k)?).trace()?;
        total = &total + &t;
        checks.push(Check::scalars(format!("commutator-trace/k={k}"), &t, &(&varphi(k) - &varphi(k + 1))));
    }
    checks.push(Check::scalars("commutator-trace/sum", &total, &field.zero()));
    Ok(checks)
}

/// `φ_i` and `φ̂_i` (`1 ≤ i ≤ d`) as sums of `tr(± (AA* - A*A) F_k)`, with
/// the projectors of `Φ`, `Φ^*`, `Φ^↓` and `Φ^⇓`: `8d` checks.
pub fn verify_trace_formulas(model: &LeonardModel) -> Result<Vec<Check>> {
    let d = model.d();
    let field = model.field();
    let c = commutator(model);
    // traces[v][k] = tr((AA* - A*A) F^v_k) for the views Φ, Φ^*, Φ^↓, Φ^⇓
    let views =
        [("F", D4Element::IDENTITY), ("F*", D4Element::STAR), ("F↓", D4Element::DOWN), ("F⇓", D4Element::DOUBLE_DOWN)];
    let mut traces = Vec::with_capacity(4);
    for &(_, g) in &views {
        let view = model.relative(g)?;
        let ts: Vec<Scalar> = (0..=d).map(|k| (&c * &f_projector(&view, k)?).trace()).collect::<Result<_>>()?;
        traces.push(ts);
    }
    let sum = |v: usize, ks: core::ops::RangeInclusive<usize>, negate: bool| {
        let s = ks.fold(field.zero(), |acc, k| &acc + &traces[v][k]);
        if negate {
            -&s
        } else {
            s
        }
    };
    let mut checks = Vec::with_capacity(8 * d);
    for i in 1..=d {
        // (label, view, range, sign) with negate meaning the A*A - AA* form
        let forms: [(&str, usize, core::ops::RangeInclusive<usize>, bool, bool); 8] = [
            ("varphi/F/upper", 0, i..=d, false, true),
            ("varphi/F/lower", 0, 0..=i - 1, true, true),
            ("varphi/F*/lower", 1, 0..=i - 1, false, true),
            ("varphi/F*/upper", 1, i..=d, true, true),
            ("phi/F↓/upper", 2, d - i + 1..=d, false, false),
            ("phi/F↓/lower", 2, 0..=d - i, true, false),
            ("phi/F⇓/upper", 3, i..=d, false, false),
            ("phi/F⇓/lower", 3, 0..=i - 1, true, false),
        ];
        for (label, v, ks, negate, is_varphi) in forms {
            debug_assert_eq!(label.split('/').nth(1), Some(views[v].0));
            let expected = if is_varphi { model.varphi(i) } else { model.phi(i) };
            checks.push(Check::scalars(format!("trace-formula/{label}/i={i}"), &sum(v, ks, negate), expected));
        }
    }
    Ok(checks)
}
