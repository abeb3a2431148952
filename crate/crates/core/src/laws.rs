//! Randomized checking of the equational laws of the kernel: the categorial
//! and CC equalities, the functional-completeness bijections and their
//! naturality, the induced functors, and the universal property of the
//! polynomial extension.
//!
//! Each law draws its cases from its own generator seeded from the suite
//! seed and the law's position, so a report depends only on the signature
//! and the [`GenConfig`], not on scheduling.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::completeness::{functor_f, functor_g, gamma_double, gamma_prime, phi_double, phi_prime};
use crate::derived;
use crate::error::Result;
use crate::gen::TermGen;
use crate::lambda::arrows_equal;
use crate::poly::{heritage, instantiate, poly_equal};
use crate::rewrite::random_walk;
use crate::syntax::{type_of, Arrow, ArrowType, Object, Signature};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct GenConfig {
    pub max_depth: usize,
    pub case_count: usize,
    pub seed: u64,
}

impl Default for GenConfig {
    fn default() -> Self {
        GenConfig {
            max_depth: 4,
            case_count: 200,
            seed: 0,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LawReport {
    pub name: &'static str,
    pub statement: &'static str,
    pub cases: usize,
    pub failures: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub skipped: Option<String>,
    pub counterexamples: Vec<String>,
}

impl LawReport {
    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Report {
    #[serde(flatten)]
    pub config: GenConfig,
    #[serde(rename = "law")]
    pub laws: Vec<LawReport>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.laws.iter().all(LawReport::passed)
    }

    pub fn law(&self, name: &str) -> Option<&LawReport> {
        self.laws.iter().find(|l| l.name == name)
    }

    /// Key/value text with one `[[law]]` record per law.
    pub fn to_text(&self) -> String {
        toml::to_string(self).expect("report fields are plain data")
    }
}

/// Counterexamples kept per law.
const KEEP_COUNTEREXAMPLES: usize = 5;

struct Case {
    holds: bool,
    witness: Vec<(&'static str, Arrow)>,
}

impl Case {
    fn new(holds: bool, witness: Vec<(&'static str, Arrow)>) -> Option<Case> {
        Some(Case { holds, witness })
    }
}

struct Ctx<'s> {
    sig: &'s Signature,
    gen: TermGen<'s, ChaCha8Rng>,
    max_depth: usize,
    d: Object,
    x: Arrow,
}

impl<'s> Ctx<'s> {
    fn depth(&mut self) -> usize {
        let max = self.max_depth.max(1);
        self.gen.rng().gen_range(1..=max)
    }

    fn obj(&mut self) -> Object {
        self.gen.object()
    }

    fn pure(&mut self, src: &Object, tgt: &Object) -> Option<Arrow> {
        let depth = self.depth();
        self.gen.set_indeterminate(false);
        self.gen.arrow(src, tgt, depth)
    }

    fn poly(&mut self, src: &Object, tgt: &Object) -> Option<Arrow> {
        let depth = self.depth();
        self.gen.set_indeterminate(true);
        self.gen.arrow(src, tgt, depth)
    }

    fn pure_any(&mut self) -> (Arrow, ArrowType) {
        let depth = self.depth();
        self.gen.set_indeterminate(false);
        self.gen.any_arrow(depth)
    }

    fn poly_any(&mut self) -> (Arrow, ArrowType) {
        let depth = self.depth();
        self.gen.set_indeterminate(true);
        self.gen.any_arrow(depth)
    }

    fn pure_from(&mut self, src: &Object) -> (Arrow, Object) {
        let depth = self.depth();
        self.gen.set_indeterminate(false);
        self.gen.arrow_from(src, depth)
    }

    fn pure_into(&mut self, tgt: &Object) -> (Arrow, Object) {
        let depth = self.depth();
        self.gen.set_indeterminate(false);
        self.gen.arrow_into(tgt, depth)
    }

    /// `D * A`
    fn d_times(&self, a: &Object) -> Object {
        Object::prod(self.d.clone(), a.clone())
    }

    /// `D -> B`
    fn d_to(&self, b: &Object) -> Object {
        Object::exp(self.d.clone(), b.clone())
    }

    fn eq(&self, f: &Arrow, g: &Arrow) -> Result<bool> {
        arrows_equal(f, g, self.sig)
    }

    fn ty(&self, f: &Arrow) -> Result<ArrowType> {
        type_of(f, self.sig)
    }

    /// A polynomial arrow together with a provably equal variant.
    fn poly_pair(&mut self) -> (Arrow, Arrow) {
        let (f, _) = self.poly_any();
        let steps = self.gen.rng().gen_range(1..=4);
        let max = 2 * f.size() + 8;
        let sig = self.sig;
        let g = random_walk(&f, sig, steps, max, self.gen.rng());
        (f, g)
    }

    /// A random point `T |- D` of the base category, if one can be found.
    fn point(&mut self) -> Option<Arrow> {
        let d = self.d.clone();
        (0..8).find_map(|_| self.pure(&Object::Terminal, &d))
    }
}

type CaseFn = fn(&mut Ctx) -> Result<Option<Case>>;

struct Law {
    name: &'static str,
    statement: &'static str,
    case: CaseFn,
}

macro_rules! law {
    ($name:literal, $statement:literal, $case:expr) => {
        Law {
            name: $name,
            statement: $statement,
            case: $case,
        }
    };
}

fn laws() -> Vec<Law> {
    vec![
        law!("left-identity", "1_B . f = f", |c| {
            let (f, ty) = c.pure_any();
            let lhs = Arrow::comp(Arrow::Id(ty.target), f.clone());
            Ok(Case::new(c.eq(&lhs, &f)?, vec![("f", f)]))
        }),
        law!("right-identity", "f . 1_A = f", |c| {
            let (f, ty) = c.pure_any();
            let lhs = Arrow::comp(f.clone(), Arrow::Id(ty.source));
            Ok(Case::new(c.eq(&lhs, &f)?, vec![("f", f)]))
        }),
        law!("associativity", "h . (g . f) = (h . g) . f", |c| {
            let (f, b) = {
                let (f, ty) = c.pure_any();
                (f, ty.target)
            };
            let (g, cc) = c.pure_from(&b);
            let (h, _) = c.pure_from(&cc);
            let lhs = Arrow::comp(h.clone(), Arrow::comp(g.clone(), f.clone()));
            let rhs = Arrow::comp(Arrow::comp(h.clone(), g.clone()), f.clone());
            Ok(Case::new(
                c.eq(&lhs, &rhs)?,
                vec![("f", f), ("g", g), ("h", h)],
            ))
        }),
        law!("terminal-eta", "f = k_A for f : A |- T", |c| {
            let a = c.obj();
            let Some(f) = c.pure(&a, &Object::Terminal) else {
                return Ok(None);
            };
            Ok(Case::new(c.eq(&f, &Arrow::Bang(a))?, vec![("f", f)]))
        }),
        law!("product-beta", "p^i . <f1, f2> = f_i", |c| {
            let (f1, ty) = c.pure_any();
            let a2 = c.obj();
            let Some(f2) = c.pure(&ty.source, &a2) else {
                return Ok(None);
            };
            let pair = Arrow::pair(f1.clone(), f2.clone());
            let l1 = Arrow::comp(Arrow::p1(ty.target.clone(), a2.clone()), pair.clone());
            let l2 = Arrow::comp(Arrow::p2(ty.target, a2), pair);
            let holds = c.eq(&l1, &f1)? && c.eq(&l2, &f2)?;
            Ok(Case::new(holds, vec![("f1", f1), ("f2", f2)]))
        }),
        law!("product-eta", "<p1 . h, p2 . h> = h", |c| {
            let (a, b) = (c.obj(), c.obj());
            let src = c.obj();
            let Some(h) = c.pure(&src, &Object::prod(a.clone(), b.clone())) else {
                return Ok(None);
            };
            let lhs = Arrow::pair(
                Arrow::comp(Arrow::p1(a.clone(), b.clone()), h.clone()),
                Arrow::comp(Arrow::p2(a, b), h.clone()),
            );
            Ok(Case::new(c.eq(&lhs, &h)?, vec![("h", h)]))
        }),
        law!("exponential-beta", "phi_{A,B}(gamma_{A,C} f) = f", |c| {
            let (a, cc) = (c.obj(), c.obj());
            let (f, _) = c.pure_from(&Object::prod(a.clone(), cc.clone()));
            let lhs = derived::phi(&Arrow::curry(a, cc, f.clone()), c.sig)?;
            Ok(Case::new(c.eq(&lhs, &f)?, vec![("f", f)]))
        }),
        law!("exponential-eta", "gamma_{A,C}(phi_{A,B} g) = g", |c| {
            let (a, b) = (c.obj(), c.obj());
            let (g, cc) = c.pure_into(&Object::exp(a.clone(), b));
            let lhs = Arrow::curry(a, cc, derived::phi(&g, c.sig)?);
            Ok(Case::new(c.eq(&lhs, &g)?, vec![("g", g)]))
        }),
        law!("heritage-functor", "H(g . f) = Hg . Hf", |c| {
            let (f, ty) = c.pure_any();
            let (g, _) = c.pure_from(&ty.target);
            let whole = heritage(&Arrow::comp(g.clone(), f.clone()))?;
            let parts = Arrow::comp(heritage(&g)?, heritage(&f)?);
            let holds = whole == parts && poly_equal(&whole, &parts, c.sig)?;
            Ok(Case::new(holds, vec![("f", f), ("g", g)]))
        }),
        law!(
            "abstraction-respects-equality",
            "[f] = [g] implies phi'f = phi'g",
            |c| {
                let (f, g) = c.poly_pair();
                if !poly_equal(&f, &g, c.sig)? {
                    return Ok(Case::new(false, vec![("f", f), ("g", g)]));
                }
                let holds = c.eq(&phi_prime(&f, c.sig)?, &phi_prime(&g, c.sig)?)?;
                Ok(Case::new(holds, vec![("f", f), ("g", g)]))
            }
        ),
        law!("apply-after-abstract", "gamma'(phi'[f]) = [f]", |c| {
            let (f, _) = c.poly_any();
            let back = gamma_prime(&phi_prime(&f, c.sig)?, c.sig)?;
            Ok(Case::new(poly_equal(&back, &f, c.sig)?, vec![("f", f)]))
        }),
        law!(
            "abstract-after-apply",
            "phi'(gamma' f) = f for f : D*A |- B",
            |c| {
                let a = c.obj();
                let (f, _) = c.pure_from(&c.d_times(&a));
                let back = phi_prime(&gamma_prime(&f, c.sig)?, c.sig)?;
                Ok(Case::new(c.eq(&back, &f)?, vec![("f", f)]))
            }
        ),
        law!(
            "left-composition",
            "phi'([g] . [f]) = phi'[g] . F[f]",
            |c| {
                let (f, ty) = c.poly_any();
                let cc = c.obj();
                let Some(g) = c.poly(&ty.target, &cc) else {
                    return Ok(None);
                };
                let lhs = phi_prime(&Arrow::comp(g.clone(), f.clone()), c.sig)?;
                let rhs = Arrow::comp(phi_prime(&g, c.sig)?, functor_f(&f, c.sig)?);
                Ok(Case::new(c.eq(&lhs, &rhs)?, vec![("f", f), ("g", g)]))
            }
        ),
        law!("left-unit", "gamma'(f . phi' 1_A) = Hf", |c| {
            let (f, ty) = c.pure_any();
            let unit = phi_prime(&Arrow::Id(ty.source), c.sig)?;
            let lhs = gamma_prime(&Arrow::comp(f.clone(), unit), c.sig)?;
            Ok(Case::new(
                poly_equal(&lhs, &heritage(&f)?, c.sig)?,
                vec![("f", f)],
            ))
        }),
        law!("right-beta", "phi''(gamma''[f]) = [f]", |c| {
            let (f, _) = c.poly_any();
            let back = phi_double(&gamma_double(&f, c.sig)?, c.sig)?;
            Ok(Case::new(poly_equal(&back, &f, c.sig)?, vec![("f", f)]))
        }),
        law!("right-eta", "gamma''(phi'' g) = g for g : A |- D->B", |c| {
            let b = c.obj();
            let (g, _) = c.pure_into(&c.d_to(&b));
            let back = gamma_double(&phi_double(&g, c.sig)?, c.sig)?;
            Ok(Case::new(c.eq(&back, &g)?, vec![("g", g)]))
        }),
        law!(
            "right-composition-gamma",
            "gamma''([g] . [f]) = G[g] . gamma''[f]",
            |c| {
                let (f, ty) = c.poly_any();
                let cc = c.obj();
                let Some(g) = c.poly(&ty.target, &cc) else {
                    return Ok(None);
                };
                let lhs = gamma_double(&Arrow::comp(g.clone(), f.clone()), c.sig)?;
                let rhs = Arrow::comp(functor_g(&g, c.sig)?, gamma_double(&f, c.sig)?);
                Ok(Case::new(c.eq(&lhs, &rhs)?, vec![("f", f), ("g", g)]))
            }
        ),
        law!(
            "right-composition-phi",
            "phi''(g . f) = phi'' g . [f]",
            |c| {
                let (f, ty) = c.pure_any();
                let cc = c.obj();
                let Some(g) = c.pure(&ty.target, &c.d_to(&cc)) else {
                    return Ok(None);
                };
                let lhs = phi_double(&Arrow::comp(g.clone(), f.clone()), c.sig)?;
                let rhs = Arrow::comp(phi_double(&g, c.sig)?, heritage(&f)?);
                Ok(Case::new(
                    poly_equal(&lhs, &rhs, c.sig)?,
                    vec![("f", f), ("g", g)],
                ))
            }
        ),
        law!("right-unit", "phi''(gamma'' 1_B . f) = Hf", |c| {
            let (f, ty) = c.pure_any();
            let unit = gamma_double(&Arrow::Id(ty.target), c.sig)?;
            let lhs = phi_double(&Arrow::comp(unit, f.clone()), c.sig)?;
            Ok(Case::new(
                poly_equal(&lhs, &heritage(&f)?, c.sig)?,
                vec![("f", f)],
            ))
        }),
        law!("left-functor-identity", "F 1_A = 1_{D*A}", |c| {
            let a = c.obj();
            let lhs = functor_f(&Arrow::Id(a.clone()), c.sig)?;
            let holds = c.eq(&lhs, &Arrow::Id(c.d_times(&a)))?;
            Ok(Case::new(holds, vec![("1_A", Arrow::Id(a))]))
        }),
        law!(
            "left-functor-composition",
            "F([g] . [f]) = F[g] . F[f]",
            |c| {
                let (f, ty) = c.poly_any();
                let cc = c.obj();
                let Some(g) = c.poly(&ty.target, &cc) else {
                    return Ok(None);
                };
                let lhs = functor_f(&Arrow::comp(g.clone(), f.clone()), c.sig)?;
                let rhs = Arrow::comp(functor_f(&g, c.sig)?, functor_f(&f, c.sig)?);
                Ok(Case::new(c.eq(&lhs, &rhs)?, vec![("f", f), ("g", g)]))
            }
        ),
        law!("right-functor-identity", "G 1_A = 1_{D->A}", |c| {
            let a = c.obj();
            let lhs = functor_g(&Arrow::Id(a.clone()), c.sig)?;
            let holds = c.eq(&lhs, &Arrow::Id(c.d_to(&a)))?;
            Ok(Case::new(holds, vec![("1_A", Arrow::Id(a))]))
        }),
        law!(
            "right-functor-composition",
            "G([g] . [f]) = G[g] . G[f]",
            |c| {
                let (f, ty) = c.poly_any();
                let cc = c.obj();
                let Some(g) = c.poly(&ty.target, &cc) else {
                    return Ok(None);
                };
                let lhs = functor_g(&Arrow::comp(g.clone(), f.clone()), c.sig)?;
                let rhs = Arrow::comp(functor_g(&g, c.sig)?, functor_g(&f, c.sig)?);
                Ok(Case::new(c.eq(&lhs, &rhs)?, vec![("f", f), ("g", g)]))
            }
        ),
        law!("composite-left", "FHf = 1_D * f", |c| {
            let (f, _) = c.pure_any();
            let lhs = functor_f(&heritage(&f)?, c.sig)?;
            let rhs = derived::times(&Arrow::Id(c.d.clone()), &f, c.sig)?;
            Ok(Case::new(c.eq(&lhs, &rhs)?, vec![("f", f)]))
        }),
        law!("composite-right", "GHf = 1_D -> f", |c| {
            let (f, _) = c.pure_any();
            let lhs = functor_g(&heritage(&f)?, c.sig)?;
            let rhs = derived::arrow(&Arrow::Id(c.d.clone()), &f, c.sig)?;
            Ok(Case::new(c.eq(&lhs, &rhs)?, vec![("f", f)]))
        }),
        law!(
            "curry-bijection-beta",
            "phi_{D,B}(gamma_{D,A} f) = f",
            |c| {
                let a = c.obj();
                let (f, _) = c.pure_from(&c.d_times(&a));
                let lhs = derived::phi(&Arrow::curry(c.d.clone(), a, f.clone()), c.sig)?;
                Ok(Case::new(c.eq(&lhs, &f)?, vec![("f", f)]))
            }
        ),
        law!("curry-bijection-eta", "gamma_{D,A}(phi_{D,B} g) = g", |c| {
            let b = c.obj();
            let (g, a) = c.pure_into(&c.d_to(&b));
            let lhs = Arrow::curry(c.d.clone(), a, derived::phi(&g, c.sig)?);
            Ok(Case::new(c.eq(&lhs, &g)?, vec![("g", g)]))
        }),
        law!(
            "curry-natural-in-a",
            "gamma_{D,A'}(f . (1_D * u)) = gamma_{D,A}(f) . u",
            |c| {
                let a = c.obj();
                let (f, _) = c.pure_from(&c.d_times(&a));
                let (u, a2) = c.pure_into(&a);
                let shifted = Arrow::comp(
                    f.clone(),
                    derived::times(&Arrow::Id(c.d.clone()), &u, c.sig)?,
                );
                let lhs = Arrow::curry(c.d.clone(), a2, shifted);
                let rhs = Arrow::comp(Arrow::curry(c.d.clone(), a, f.clone()), u.clone());
                Ok(Case::new(c.eq(&lhs, &rhs)?, vec![("f", f), ("u", u)]))
            }
        ),
        law!(
            "curry-natural-in-b",
            "gamma_{D,A}(v . f) = (1_D -> v) . gamma_{D,A}(f)",
            |c| {
                let a = c.obj();
                let (f, b) = c.pure_from(&c.d_times(&a));
                let (v, _) = c.pure_from(&b);
                let lhs = Arrow::curry(c.d.clone(), a.clone(), Arrow::comp(v.clone(), f.clone()));
                let rhs = Arrow::comp(
                    derived::arrow(&Arrow::Id(c.d.clone()), &v, c.sig)?,
                    Arrow::curry(c.d.clone(), a, f.clone()),
                );
                Ok(Case::new(c.eq(&lhs, &rhs)?, vec![("f", f), ("v", v)]))
            }
        ),
        law!(
            "left-naturality",
            "phi'(Hv . [f] . Hu) = v . phi'[f] . (1_D * u)",
            |c| {
                let (f, ty) = c.poly_any();
                let (u, _) = c.pure_into(&ty.source);
                let (v, _) = c.pure_from(&ty.target);
                let square = Arrow::comp(heritage(&v)?, Arrow::comp(f.clone(), heritage(&u)?));
                let lhs = phi_prime(&square, c.sig)?;
                let rhs = Arrow::comp(
                    v.clone(),
                    Arrow::comp(
                        phi_prime(&f, c.sig)?,
                        derived::times(&Arrow::Id(c.d.clone()), &u, c.sig)?,
                    ),
                );
                Ok(Case::new(
                    c.eq(&lhs, &rhs)?,
                    vec![("f", f), ("u", u), ("v", v)],
                ))
            }
        ),
        law!(
            "right-naturality",
            "gamma''(Hv . [f] . Hu) = (1_D -> v) . gamma''[f] . u",
            |c| {
                let (f, ty) = c.poly_any();
                let (u, _) = c.pure_into(&ty.source);
                let (v, _) = c.pure_from(&ty.target);
                let square = Arrow::comp(heritage(&v)?, Arrow::comp(f.clone(), heritage(&u)?));
                let lhs = gamma_double(&square, c.sig)?;
                let rhs = Arrow::comp(
                    derived::arrow(&Arrow::Id(c.d.clone()), &v, c.sig)?,
                    Arrow::comp(gamma_double(&f, c.sig)?, u.clone()),
                );
                Ok(Case::new(
                    c.eq(&lhs, &rhs)?,
                    vec![("f", f), ("u", u), ("v", v)],
                ))
            }
        ),
        law!("instantiate-point", "N x = a", |c| {
            let Some(a) = c.point() else { return Ok(None) };
            let holds = instantiate(&c.x, &a, c.sig)? == a;
            Ok(Case::new(holds, vec![("a", a)]))
        }),
        law!("instantiate-heritage", "N H f = f", |c| {
            let Some(a) = c.point() else { return Ok(None) };
            let (f, _) = c.pure_any();
            let holds = instantiate(&heritage(&f)?, &a, c.sig)? == f;
            Ok(Case::new(holds, vec![("f", f), ("a", a)]))
        }),
        law!("instantiate-functor", "N([g] . [f]) = N[g] . N[f]", |c| {
            let Some(a) = c.point() else { return Ok(None) };
            let (f, ty) = c.poly_any();
            let cc = c.obj();
            let Some(g) = c.poly(&ty.target, &cc) else {
                return Ok(None);
            };
            let whole = instantiate(&Arrow::comp(g.clone(), f.clone()), &a, c.sig)?;
            let parts = Arrow::comp(instantiate(&g, &a, c.sig)?, instantiate(&f, &a, c.sig)?);
            let holds = whole == parts && c.ty(&whole)? == ArrowType::new(ty.source, cc);
            Ok(Case::new(holds, vec![("f", f), ("g", g), ("a", a)]))
        }),
        law!(
            "instantiate-respects-equality",
            "[f] = [g] implies N[f] = N[g]",
            |c| {
                let Some(a) = c.point() else { return Ok(None) };
                let (f, g) = c.poly_pair();
                let holds = c.eq(&instantiate(&f, &a, c.sig)?, &instantiate(&g, &a, c.sig)?)?;
                Ok(Case::new(holds, vec![("f", f), ("g", g), ("a", a)]))
            }
        ),
    ]
}

/// Names of every law the suite checks, in report order.
pub fn law_names() -> Vec<&'static str> {
    laws().iter().map(|l| l.name).collect()
}

fn run_law(index: usize, law: &Law, sig: &Signature, config: GenConfig) -> LawReport {
    let seed = config
        .seed
        .wrapping_add((index as u64 + 1).wrapping_mul(0x9E37_79B9_7F4A_7C15));
    let (x, d) = match sig.indeterminate() {
        Some(x) => (Arrow::Indet(x.name.clone()), x.target.clone()),
        None => unreachable!("checked by law_suite"),
    };
    let mut ctx = Ctx {
        sig,
        gen: TermGen::new(sig, ChaCha8Rng::seed_from_u64(seed)),
        max_depth: config.max_depth,
        d,
        x,
    };
    let mut report = LawReport {
        name: law.name,
        statement: law.statement,
        cases: 0,
        failures: 0,
        skipped: None,
        counterexamples: Vec::new(),
    };
    let mut attempts = 0;
    while report.cases < config.case_count {
        attempts += 1;
        if attempts > 20 * config.case_count.max(1) {
            report.skipped = Some(if report.cases == 0 {
                "no instance found over this signature".to_string()
            } else {
                format!("only {} instances found over this signature", report.cases)
            });
            break;
        }
        let (holds, witness) = match (law.case)(&mut ctx) {
            Ok(None) => continue,
            Ok(Some(case)) => (case.holds, render(&case.witness)),
            Err(e) => (false, format!("error: {e}")),
        };
        report.cases += 1;
        if !holds {
            report.failures += 1;
            if report.counterexamples.len() < KEEP_COUNTEREXAMPLES {
                report.counterexamples.push(witness);
            }
        }
    }
    report
}

fn render(witness: &[(&str, Arrow)]) -> String {
    witness
        .iter()
        .map(|(k, v)| format!("{k} = {v}"))
        .collect::<Vec<_>>()
        .join("; ")
}

/// Runs every law on `config.case_count` random instances. Laws are checked
/// in parallel; the report is the same for the same signature and config.
pub fn law_suite(sig: &Signature, config: GenConfig) -> Result<Report> {
    sig.indeterminate_target()?;
    let laws = laws();
    let laws_ref = &laws;
    let reports = std::thread::scope(|scope| {
        let handles: Vec<_> = laws_ref
            .iter()
            .enumerate()
            .map(|(i, law)| scope.spawn(move || run_law(i, law, sig, config)))
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("law worker panicked"))
            .collect()
    });
    Ok(Report {
        config,
        laws: reports,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::surface::parse_signature;

    fn sig() -> Signature {
        parse_signature(include_str!("../data/default.sig")).unwrap()
    }

    #[test]
    fn small_run_passes_and_is_deterministic() {
        let s = sig();
        let config = GenConfig {
            max_depth: 2,
            case_count: 10,
            seed: 42,
        };
        let r1 = law_suite(&s, config).unwrap();
        let r2 = law_suite(&s, config).unwrap();
        assert_eq!(r1, r2);
        for law in &r1.laws {
            assert!(law.passed(), "{law:?}");
        }
        assert_eq!(r1.laws.len(), law_names().len());
    }

    #[test]
    fn instantiation_laws_need_a_point() {
        let s = sig();
        let config = GenConfig {
            max_depth: 2,
            case_count: 3,
            seed: 1,
        };
        let r = law_suite(&s, config).unwrap();
        let inst = r.law("instantiate-point").unwrap();
        assert_eq!(inst.cases, 0);
        assert!(inst.skipped.is_some());

        let mut with_point = s.clone();
        with_point
            .add_const("d0", ArrowType::new(Object::Terminal, Object::atom("D")))
            .unwrap();
        let r = law_suite(&with_point, config).unwrap();
        assert_eq!(r.law("instantiate-point").unwrap().cases, 3);
        assert!(r.passed());
    }

    #[test]
    fn report_text_has_one_record_per_law() {
        let s = sig();
        let config = GenConfig {
            max_depth: 1,
            case_count: 2,
            seed: 3,
        };
        let text = law_suite(&s, config).unwrap().to_text();
        assert_eq!(text.matches("[[law]]").count(), law_names().len());
        assert!(text.contains("seed = 3"));
        let parsed: toml::Value = toml::from_str(&text).unwrap();
        assert_eq!(parsed["law"].as_array().unwrap().len(), law_names().len());
    }

    #[test]
    fn needs_an_indeterminate() {
        let s = parse_signature("object A").unwrap();
        assert!(law_suite(&s, GenConfig::default()).is_err());
    }
}
