//! One-step equational rewriting with the categorial and CC equalities, in
//! both directions, and a bounded search for equational derivations.
//!
//! This is a second, independent route to arrow equality: it knows nothing
//! about lambda terms or normal forms. It is incomplete (it cannot invent
//! the discarded component when reading `p1 . <f, g> = f` backwards, nor an
//! arbitrary `f : A |- T` from `k_A`), so it only ever confirms equalities.

use std::collections::HashSet;

use rand::seq::SliceRandom;
use rand::Rng;

use crate::error::Result;
use crate::syntax::derived::phi_at;
use crate::syntax::{same_type, type_of, Arrow, Object, Side, Signature};

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Verdict {
    Proved,
    UnprovedAtBound,
}

/// Cap on the number of terms visited from each side of the search.
const MAX_VISITED: usize = 200_000;

/// Every term obtained from `t` by one equation applied at one position,
/// keeping only results of at most `max_size` constructors.
pub fn neighbours(t: &Arrow, sig: &Signature, max_size: usize) -> Vec<Arrow> {
    let mut out = Vec::new();
    collect(t, sig, &mut out);
    out.retain(|n| n.size() <= max_size && n != t);
    out
}

fn collect(t: &Arrow, sig: &Signature, out: &mut Vec<Arrow>) {
    root_steps(t, sig, out);
    match t {
        Arrow::Comp(after, before) => {
            let mut sub = Vec::new();
            collect(after, sig, &mut sub);
            out.extend(sub.drain(..).map(|a| Arrow::Comp(a.into(), before.clone())));
            collect(before, sig, &mut sub);
            out.extend(sub.drain(..).map(|b| Arrow::Comp(after.clone(), b.into())));
        }
        Arrow::Pair(fst, snd) => {
            let mut sub = Vec::new();
            collect(fst, sig, &mut sub);
            out.extend(sub.drain(..).map(|a| Arrow::Pair(a.into(), snd.clone())));
            collect(snd, sig, &mut sub);
            out.extend(sub.drain(..).map(|b| Arrow::Pair(fst.clone(), b.into())));
        }
        Arrow::Curry(dom, ctx, body) => {
            let mut sub = Vec::new();
            collect(body, sig, &mut sub);
            out.extend(
                sub.into_iter()
                    .map(|b| Arrow::curry(dom.clone(), ctx.clone(), b)),
            );
        }
        _ => {}
    }
}

/// Matches `eps_{A,B} . <id_A . p1_{A,C}, g . p2_{A,C}>` and returns `g`.
fn match_phi(t: &Arrow) -> Option<&Arrow> {
    let Arrow::Comp(eval, pair) = t else {
        return None;
    };
    let (Arrow::Eval(a, _), Arrow::Pair(left, right)) = (&**eval, &**pair) else {
        return None;
    };
    let Arrow::Comp(id, p1) = &**left else {
        return None;
    };
    let Arrow::Comp(g, p2) = &**right else {
        return None;
    };
    match (&**id, &**p1, &**p2) {
        (Arrow::Id(a1), Arrow::Proj(Side::First, a2, c1), Arrow::Proj(Side::Second, a3, c2))
            if a1 == a && a2 == a && a3 == a && c1 == c2 =>
        {
            Some(g)
        }
        _ => None,
    }
}

fn root_steps(t: &Arrow, sig: &Signature, out: &mut Vec<Arrow>) {
    let Ok(ty) = type_of(t, sig) else { return };
    let (src, tgt) = (&ty.source, &ty.target);

    // Categorial equalities.
    if let Arrow::Comp(after, before) = t {
        if matches!(**before, Arrow::Id(_)) {
            out.push((**after).clone());
        }
        if matches!(**after, Arrow::Id(_)) {
            out.push((**before).clone());
        }
        if let Arrow::Comp(g, f) = &**before {
            out.push(Arrow::Comp(
                Arrow::Comp(after.clone(), g.clone()).into(),
                f.clone(),
            ));
        }
        if let Arrow::Comp(h, g) = &**after {
            out.push(Arrow::Comp(
                h.clone(),
                Arrow::Comp(g.clone(), before.clone()).into(),
            ));
        }
    }
    out.push(Arrow::comp(t.clone(), Arrow::Id(src.clone())));
    out.push(Arrow::comp(Arrow::Id(tgt.clone()), t.clone()));

    // (T eta)
    if *tgt == Object::Terminal && *t != Arrow::Bang(src.clone()) {
        out.push(Arrow::Bang(src.clone()));
    }

    // (x beta)
    if let Arrow::Comp(proj, pair) = t {
        if let (Arrow::Proj(side, ..), Arrow::Pair(fst, snd)) = (&**proj, &**pair) {
            out.push(match side {
                Side::First => (**fst).clone(),
                Side::Second => (**snd).clone(),
            });
        }
    }

    // (x eta), both directions.
    if let Arrow::Pair(l, r) = t {
        if let (Arrow::Comp(p1, h1), Arrow::Comp(p2, h2)) = (&**l, &**r) {
            if matches!(**p1, Arrow::Proj(Side::First, ..))
                && matches!(**p2, Arrow::Proj(Side::Second, ..))
                && h1 == h2
            {
                out.push((**h1).clone());
            }
        }
    }
    if let Some((a, b)) = tgt.as_prod() {
        out.push(Arrow::pair(
            Arrow::comp(Arrow::p1(a.clone(), b.clone()), t.clone()),
            Arrow::comp(Arrow::p2(a.clone(), b.clone()), t.clone()),
        ));
    }

    // (-> beta), both directions.
    if let Some(Arrow::Curry(_, _, f)) = match_phi(t) {
        out.push((**f).clone());
    }
    if let Some((a, c)) = src.as_prod() {
        let curried = Arrow::curry(a.clone(), c.clone(), t.clone());
        out.push(phi_at(curried, a, tgt, c));
    }

    // (-> eta), both directions.
    if let Arrow::Curry(_, _, body) = t {
        if let Some(g) = match_phi(body) {
            out.push(g.clone());
        }
    }
    if let Some((a, b)) = tgt.as_exp() {
        out.push(Arrow::curry(
            a.clone(),
            src.clone(),
            phi_at(t.clone(), a, b, src),
        ));
    }
}

/// Searches for a derivation of `f = g` with at most `bound` rewrite steps,
/// breadth-first from both ends.
pub fn oracle_equal(f: &Arrow, g: &Arrow, sig: &Signature, bound: usize) -> Result<Verdict> {
    same_type(f, g, sig)?;
    if f == g {
        return Ok(Verdict::Proved);
    }
    let max_size = 2 * f.size().max(g.size()) + 8;
    let mut sides = [Search::new(f), Search::new(g)];
    for _ in 0..bound {
        let (grow, other) = if sides[0].frontier.len() <= sides[1].frontier.len() {
            (0, 1)
        } else {
            (1, 0)
        };
        if sides[grow].seen.len() > MAX_VISITED {
            break;
        }
        let layer: Vec<Arrow> = std::mem::take(&mut sides[grow].frontier);
        for t in &layer {
            for n in neighbours(t, sig, max_size) {
                if sides[other].seen.contains(&n) {
                    return Ok(Verdict::Proved);
                }
                if sides[grow].seen.insert(n.clone()) {
                    sides[grow].frontier.push(n);
                }
            }
        }
        if sides[grow].frontier.is_empty() {
            break;
        }
    }
    Ok(Verdict::UnprovedAtBound)
}

struct Search {
    seen: HashSet<Arrow>,
    frontier: Vec<Arrow>,
}

impl Search {
    fn new(t: &Arrow) -> Self {
        Search {
            seen: HashSet::from([t.clone()]),
            frontier: vec![t.clone()],
        }
    }
}

/// A random walk of `steps` rewrites starting at `t`. Each step is an
/// instance of an equation, so the result is provably equal to `t`.
pub fn random_walk<R: Rng + ?Sized>(
    t: &Arrow,
    sig: &Signature,
    steps: usize,
    max_size: usize,
    rng: &mut R,
) -> Arrow {
    let mut cur = t.clone();
    for _ in 0..steps {
        let next = neighbours(&cur, sig, max_size);
        match next.choose(rng) {
            Some(n) => cur = n.clone(),
            None => break,
        }
    }
    cur
}
