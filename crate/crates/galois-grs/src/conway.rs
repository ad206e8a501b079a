//! Embedded Conway polynomials for the canonical field table.
//!
//! Coefficients are listed constant term first, leading coefficient last
//! (always 1). Conway polynomials are primitive, so the residue class of
//! `x` generates the multiplicative group of the constructed field.

/// Looks up the Conway polynomial for `GF(p^h)`.
///
/// Covers `p` in `{3, 5, 7, 11, 13}` with `1 <= h <= 8`. Returns `None`
/// outside that range; callers must then supply an explicit modulus.
pub fn conway_polynomial(p: u64, h: u32) -> Option<&'static [u64]> {
    let table: &[&[u64]] = match p {
        3 => &CONWAY_3,
        5 => &CONWAY_5,
        7 => &CONWAY_7,
        11 => &CONWAY_11,
        13 => &CONWAY_13,
        _ => return None,
    };
    if h == 0 || h as usize > table.len() {
        return None;
    }
    Some(table[h as usize - 1])
}

static CONWAY_3: [&[u64]; 8] = [
    &[1, 1],
    &[2, 2, 1],
    &[1, 2, 0, 1],
    &[2, 0, 0, 2, 1],
    &[1, 2, 0, 0, 0, 1],
    &[2, 2, 1, 0, 2, 0, 1],
    &[1, 0, 2, 0, 0, 0, 0, 1],
    &[2, 2, 2, 0, 1, 2, 0, 0, 1],
];

static CONWAY_5: [&[u64]; 8] = [
    &[3, 1],
    &[2, 4, 1],
    &[3, 3, 0, 1],
    &[2, 4, 4, 0, 1],
    &[3, 4, 0, 0, 0, 1],
    &[2, 0, 1, 4, 1, 0, 1],
    &[3, 3, 0, 0, 0, 0, 0, 1],
    &[2, 4, 3, 0, 1, 0, 0, 0, 1],
];

static CONWAY_7: [&[u64]; 8] = [
    &[4, 1],
    &[3, 6, 1],
    &[4, 0, 6, 1],
    &[3, 4, 5, 0, 1],
    &[4, 1, 0, 0, 0, 1],
    &[3, 6, 4, 5, 1, 0, 1],
    &[4, 6, 0, 0, 0, 0, 0, 1],
    &[3, 2, 6, 4, 0, 0, 0, 0, 1],
];

static CONWAY_11: [&[u64]; 8] = [
    &[9, 1],
    &[2, 7, 1],
    &[9, 2, 0, 1],
    &[2, 10, 8, 0, 1],
    &[9, 0, 10, 0, 0, 1],
    &[2, 7, 6, 4, 3, 0, 1],
    &[9, 4, 0, 0, 0, 0, 0, 1],
    &[2, 7, 1, 7, 7, 0, 0, 0, 1],
];

static CONWAY_13: [&[u64]; 8] = [
    &[11, 1],
    &[2, 12, 1],
    &[11, 2, 0, 1],
    &[2, 12, 3, 0, 1],
    &[11, 4, 0, 0, 0, 1],
    &[2, 11, 11, 10, 0, 0, 1],
    &[11, 3, 0, 0, 0, 0, 0, 1],
    &[2, 3, 2, 12, 8, 0, 0, 0, 1],
];
