//! Functional completeness: the hom-set bijections between polynomial
//! arrows `A |- B` and base arrows `D*A |- B` (left adjoint, via product)
//! and `A |- D->B` (right adjoint, via exponentiation), plus the functors
//! they induce.
//!
//! All maps return their defining terms literally. Laws between them hold
//! up to [`arrows_equal`](crate::lambda::arrows_equal), not syntactically.

use crate::error::{Error, Result};
use crate::syntax::derived::{assoc_left, assoc_right, phi_at, swap, times_at};
use crate::syntax::{type_of, Arrow, Name, Object, Signature};

fn indeterminate(sig: &Signature) -> Result<(Name, Object)> {
    let x = sig.indeterminate().ok_or(Error::NoIndeterminate)?;
    Ok((x.name.clone(), x.target.clone()))
}

/// Abstraction of the indeterminate: sends a polynomial arrow `A |- B` to a
/// base arrow `D*A |- B`, by recursion on the term.
pub fn phi_prime(f: &Arrow, sig: &Signature) -> Result<Arrow> {
    let (_, d) = indeterminate(sig)?;
    type_of(f, sig)?;
    abstract_at(f, &d, sig)
}

fn abstract_at(f: &Arrow, d: &Object, sig: &Signature) -> Result<Arrow> {
    Ok(match f {
        Arrow::Indet(_) => Arrow::p1(d.clone(), Object::Terminal),
        Arrow::Comp(after, before) => {
            let a = type_of(before, sig)?.source;
            Arrow::comp(
                abstract_at(after, d, sig)?,
                Arrow::pair(Arrow::p1(d.clone(), a), abstract_at(before, d, sig)?),
            )
        }
        Arrow::Pair(fst, snd) => Arrow::pair(abstract_at(fst, d, sig)?, abstract_at(snd, d, sig)?),
        Arrow::Curry(a, c, body) => {
            // D*(A*C) <- (D*A)*C <- (A*D)*C <- A*(D*C)
            let ad = Object::prod(a.clone(), d.clone());
            let shuffle = Arrow::comp(
                assoc_left(d, a, c),
                Arrow::comp(
                    times_at(swap(a, d), &ad, Arrow::Id(c.clone()), c),
                    assoc_right(a, d, c),
                ),
            );
            Arrow::curry(
                a.clone(),
                Object::prod(d.clone(), c.clone()),
                Arrow::comp(abstract_at(body, d, sig)?, shuffle),
            )
        }
        primitive => {
            let a = type_of(primitive, sig)?.source;
            Arrow::comp(primitive.clone(), Arrow::p2(d.clone(), a))
        }
    })
}

/// Checks that `f` is a base arrow with source `D*A` and returns `A`.
fn split_source(f: &Arrow, d: &Object, sig: &Signature) -> Result<Object> {
    f.require_pure()?;
    let ty = type_of(f, sig)?;
    match ty.source.as_prod() {
        Some((d1, a)) if d1 == d => Ok(a.clone()),
        Some((d1, _)) => Err(Error::mismatch(f, d, d1)),
        None => Err(Error::ShapeMismatch {
            term: Box::new(f.clone()),
            expected: "a source of the form D * A",
            found: ty.source,
        }),
    }
}

/// Application to the indeterminate: `f . <x . k_A, 1_A>` for a base arrow
/// `f : D*A |- B`.
pub fn gamma_prime(f: &Arrow, sig: &Signature) -> Result<Arrow> {
    let (x, d) = indeterminate(sig)?;
    let a = split_source(f, &d, sig)?;
    Ok(Arrow::comp(
        f.clone(),
        Arrow::pair(
            Arrow::comp(Arrow::Indet(x), Arrow::Bang(a.clone())),
            Arrow::Id(a),
        ),
    ))
}

/// The left adjoint on arrows: `<p1_{D,A}, phi_prime f> : D*A |- D*B`.
pub fn functor_f(f: &Arrow, sig: &Signature) -> Result<Arrow> {
    let (_, d) = indeterminate(sig)?;
    let a = type_of(f, sig)?.source;
    Ok(Arrow::pair(
        Arrow::p1(d.clone(), a),
        abstract_at(f, &d, sig)?,
    ))
}

/// Abstraction into the exponential: `gamma_{D,A}(phi_prime f) : A |- D->B`.
pub fn gamma_double(f: &Arrow, sig: &Signature) -> Result<Arrow> {
    let (_, d) = indeterminate(sig)?;
    let a = type_of(f, sig)?.source;
    Ok(Arrow::curry(d.clone(), a, abstract_at(f, &d, sig)?))
}

/// Inverse of [`gamma_double`]: `gamma_prime(phi_{D,B} g)` for a base arrow
/// `g : A |- D->B`.
pub fn phi_double(g: &Arrow, sig: &Signature) -> Result<Arrow> {
    let (_, d) = indeterminate(sig)?;
    g.require_pure()?;
    let ty = type_of(g, sig)?;
    let b = match ty.target.as_exp() {
        Some((d1, b)) if *d1 == d => b.clone(),
        Some((d1, _)) => return Err(Error::mismatch(g, &d, d1)),
        None => {
            return Err(Error::ShapeMismatch {
                term: Box::new(g.clone()),
                expected: "a target of the form D -> B",
                found: ty.target,
            })
        }
    };
    gamma_prime(&phi_at(g.clone(), &d, &b, &ty.source), sig)
}

/// The right adjoint on arrows:
/// `gamma_{D,D->A}(phi_prime f . <p1_{D,D->A}, eps_{D,A}>) : D->A |- D->B`.
pub fn functor_g(f: &Arrow, sig: &Signature) -> Result<Arrow> {
    let (_, d) = indeterminate(sig)?;
    let a = type_of(f, sig)?.source;
    let da = Object::exp(d.clone(), a.clone());
    let body = Arrow::comp(
        abstract_at(f, &d, sig)?,
        Arrow::pair(Arrow::p1(d.clone(), da.clone()), Arrow::Eval(d.clone(), a)),
    );
    Ok(Arrow::curry(d, da, body))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::derived;
    use crate::lambda::arrows_equal;
    use crate::poly::{heritage, poly_equal};
    use crate::surface::{parse_arrow, parse_signature};
    use crate::syntax::ArrowType;

    fn sig() -> Signature {
        parse_signature(include_str!("../data/default.sig")).unwrap()
    }

    fn term(text: &str) -> Arrow {
        parse_arrow(text, &sig()).unwrap().term
    }

    fn d() -> Object {
        Object::atom("D")
    }
    fn a() -> Object {
        Object::atom("A")
    }
    fn b() -> Object {
        Object::atom("B")
    }

    #[test]
    fn abstraction_of_the_indeterminate() {
        assert_eq!(
            phi_prime(&term("x"), &sig()).unwrap(),
            Arrow::p1(d(), Object::Terminal)
        );
    }

    #[test]
    fn abstraction_of_base_arrows() {
        let f = term("f");
        assert_eq!(
            phi_prime(&heritage(&f).unwrap(), &sig()).unwrap(),
            Arrow::comp(f, Arrow::p2(d(), a()))
        );
    }

    #[test]
    fn abstraction_of_a_composite() {
        let s = sig();
        let (f, g) = (term("f"), term("g"));
        let lit = phi_prime(&Arrow::comp(g.clone(), f.clone()), &s).unwrap();
        let expected = Arrow::comp(
            Arrow::comp(g.clone(), Arrow::p2(d(), b())),
            Arrow::pair(
                Arrow::p1(d(), a()),
                Arrow::comp(f.clone(), Arrow::p2(d(), a())),
            ),
        );
        assert_eq!(lit, expected);
        let direct = Arrow::comp(g, Arrow::comp(f, Arrow::p2(d(), a())));
        assert!(arrows_equal(&lit, &direct, &s).unwrap());
    }

    #[test]
    fn abstraction_under_curry_is_well_typed() {
        let s = sig();
        let t = term("curry[A, T](h . <x . k[A * T], p1[A, T]>)");
        let out = phi_prime(&t, &s).unwrap();
        assert!(!out.mentions_indeterminate());
        assert_eq!(
            type_of(&out, &s).unwrap(),
            ArrowType::new(Object::prod(d(), Object::Terminal), Object::exp(a(), b()))
        );
        assert!(poly_equal(&gamma_prime(&out, &s).unwrap(), &t, &s).unwrap());
    }

    #[test]
    fn application_examples() {
        let s = sig();
        let g = gamma_prime(&Arrow::p2(d(), a()), &s).unwrap();
        assert_eq!(g, term("p2[D,A] . <x . k[A], id[A]>"));
        assert!(poly_equal(&g, &Arrow::Id(a()), &s).unwrap());
        let gx = gamma_prime(&Arrow::p1(d(), Object::Terminal), &s).unwrap();
        assert_eq!(
            type_of(&gx, &s).unwrap(),
            ArrowType::new(Object::Terminal, d())
        );
        assert!(poly_equal(&gx, &term("x"), &s).unwrap());
        assert!(gamma_prime(&term("f"), &s).is_err());
        assert!(gamma_prime(&term("p2[A,D]"), &s).is_err());
        assert!(gamma_prime(&term("p2[D,A] . <x . k[A], id[A]>"), &s).is_err());
    }

    #[test]
    fn left_functor_on_heritage() {
        let s = sig();
        let f = term("f");
        let ff = functor_f(&f, &s).unwrap();
        assert_eq!(
            ff,
            Arrow::pair(
                Arrow::p1(d(), a()),
                Arrow::comp(f.clone(), Arrow::p2(d(), a()))
            )
        );
        let times = derived::times(&Arrow::Id(d()), &f, &s).unwrap();
        assert!(arrows_equal(&ff, &times, &s).unwrap());
        let id = functor_f(&Arrow::Id(a()), &s).unwrap();
        assert!(arrows_equal(&id, &Arrow::Id(Object::prod(d(), a())), &s).unwrap());
    }

    #[test]
    fn right_adjunction_examples() {
        let s = sig();
        let gx = gamma_double(&term("x"), &s).unwrap();
        assert_eq!(
            gx,
            Arrow::curry(d(), Object::Terminal, Arrow::p1(d(), Object::Terminal))
        );
        assert_eq!(
            type_of(&gx, &s).unwrap(),
            ArrowType::new(Object::Terminal, Object::exp(d(), d()))
        );
        assert!(poly_equal(&phi_double(&gx, &s).unwrap(), &term("x"), &s).unwrap());

        let g = term("curry[D,A](h)");
        let back = gamma_double(&phi_double(&g, &s).unwrap(), &s).unwrap();
        assert!(arrows_equal(&back, &g, &s).unwrap());
        assert_eq!(
            type_of(&phi_double(&g, &s).unwrap(), &s).unwrap(),
            ArrowType::new(a(), b())
        );
        assert!(phi_double(&term("f"), &s).is_err());
    }

    #[test]
    fn right_functor_on_heritage() {
        let s = sig();
        let f = term("f");
        let gf = functor_g(&f, &s).unwrap();
        let arrow = derived::arrow(&Arrow::Id(d()), &f, &s).unwrap();
        assert!(arrows_equal(&gf, &arrow, &s).unwrap());
        let id = functor_g(&Arrow::Id(a()), &s).unwrap();
        assert!(arrows_equal(&id, &Arrow::Id(Object::exp(d(), a())), &s).unwrap());
    }

    #[test]
    fn requires_an_indeterminate() {
        let s = parse_signature("object A").unwrap();
        assert_eq!(
            phi_prime(&Arrow::Id(a()), &s).unwrap_err(),
            Error::NoIndeterminate
        );
    }
}
