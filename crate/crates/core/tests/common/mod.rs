#![allow(dead_code)]

use ccc_core::gen::TermGen;
use ccc_core::surface::parse_signature;
use ccc_core::{ArrowType, Object, Signature};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub const DEFAULT_SIG: &str = include_str!("../../data/default.sig");

pub fn default_sig() -> Signature {
    parse_signature(DEFAULT_SIG).unwrap()
}

/// The default signature plus a base point `d0 : T |- D`.
pub fn sig_with_point() -> Signature {
    let mut s = default_sig();
    s.add_const("d0", ArrowType::new(Object::Terminal, Object::atom("D")))
        .unwrap();
    s
}

pub fn generator(sig: &Signature, seed: u64, poly: bool) -> TermGen<'_, ChaCha8Rng> {
    TermGen::new(sig, ChaCha8Rng::seed_from_u64(seed)).with_indeterminate(poly)
}
