//! Seeded random element generators shared by the property suites.
//!
//! Everything is driven by ChaCha8 so that every run of a check with the same
//! seed sees the same sample stream, on every platform.

use rand::Rng;
use rand_chacha::ChaCha8Rng;

use crate::ggroup::GElem;
use crate::mgroup::MElem;
use crate::pgroup::PElem;

pub fn rand_melem(rng: &mut ChaCha8Rng, span: i64) -> MElem {
    MElem::new(
        rng.gen_range(-span..=span),
        rng.gen_range(-span..=span),
        rng.gen_range(-span..=span),
    )
}

pub fn rand_gelem(rng: &mut ChaCha8Rng, span: i64) -> GElem {
    GElem::from_parts(
        rng.gen_range(-span..=span),
        rng.gen_range(-span..=span),
        rng.gen_range(-span..=span),
        rng.gen_bool(0.5),
        rng.gen_bool(0.5),
        rng.gen_bool(0.5),
        rng.gen_range(0..3u8),
    )
}

pub fn rand_pelem(rng: &mut ChaCha8Rng, span: i64) -> PElem {
    PElem {
        g: rand_gelem(rng, span),
        e: rng.gen_bool(0.5),
    }
}
