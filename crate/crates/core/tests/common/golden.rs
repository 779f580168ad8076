//! Positive roots in regular order with squared lengths, as published.

pub const B6: [([i64; 6], i64); 36] = [
    ([1, 0, 0, 0, 0, 0], 2),
    ([0, 1, 0, 0, 0, 0], 2),
    ([0, 0, 1, 0, 0, 0], 2),
    ([0, 0, 0, 1, 0, 0], 2),
    ([0, 0, 0, 0, 1, 0], 2),
    ([0, 0, 0, 0, 0, 1], 1),
    ([1, 1, 0, 0, 0, 0], 2),
    ([0, 1, 1, 0, 0, 0], 2),
    ([0, 0, 1, 1, 0, 0], 2),
    ([0, 0, 0, 1, 1, 0], 2),
    ([0, 0, 0, 0, 1, 1], 1),
    ([1, 1, 1, 0, 0, 0], 2),
    ([0, 1, 1, 1, 0, 0], 2),
    ([0, 0, 1, 1, 1, 0], 2),
    ([0, 0, 0, 1, 1, 1], 1),
    ([0, 0, 0, 0, 1, 2], 2),
    ([1, 1, 1, 1, 0, 0], 2),
    ([0, 1, 1, 1, 1, 0], 2),
    ([0, 0, 1, 1, 1, 1], 1),
    ([0, 0, 0, 1, 1, 2], 2),
    ([1, 1, 1, 1, 1, 0], 2),
    ([0, 1, 1, 1, 1, 1], 1),
    ([0, 0, 1, 1, 1, 2], 2),
    ([0, 0, 0, 1, 2, 2], 2),
    ([1, 1, 1, 1, 1, 1], 1),
    ([0, 1, 1, 1, 1, 2], 2),
    ([0, 0, 1, 1, 2, 2], 2),
    ([1, 1, 1, 1, 1, 2], 2),
    ([0, 1, 1, 1, 2, 2], 2),
    ([0, 0, 1, 2, 2, 2], 2),
    ([1, 1, 1, 1, 2, 2], 2),
    ([0, 1, 1, 2, 2, 2], 2),
    ([1, 1, 1, 2, 2, 2], 2),
    ([0, 1, 2, 2, 2, 2], 2),
    ([1, 1, 2, 2, 2, 2], 2),
    ([1, 2, 2, 2, 2, 2], 2),
];

pub const C6: [([i64; 6], i64); 36] = [
    ([1, 0, 0, 0, 0, 0], 1),
    ([0, 1, 0, 0, 0, 0], 1),
    ([0, 0, 1, 0, 0, 0], 1),
    ([0, 0, 0, 1, 0, 0], 1),
    ([0, 0, 0, 0, 1, 0], 1),
    ([0, 0, 0, 0, 0, 1], 2),
    ([1, 1, 0, 0, 0, 0], 1),
    ([0, 1, 1, 0, 0, 0], 1),
    ([0, 0, 1, 1, 0, 0], 1),
    ([0, 0, 0, 1, 1, 0], 1),
    ([0, 0, 0, 0, 1, 1], 1),
    ([1, 1, 1, 0, 0, 0], 1),
    ([0, 1, 1, 1, 0, 0], 1),
    ([0, 0, 1, 1, 1, 0], 1),
    ([0, 0, 0, 1, 1, 1], 1),
    ([0, 0, 0, 0, 2, 1], 2),
    ([1, 1, 1, 1, 0, 0], 1),
    ([0, 1, 1, 1, 1, 0], 1),
    ([0, 0, 1, 1, 1, 1], 1),
    ([0, 0, 0, 1, 2, 1], 1),
    ([1, 1, 1, 1, 1, 0], 1),
    ([0, 1, 1, 1, 1, 1], 1),
    ([0, 0, 1, 1, 2, 1], 1),
    ([0, 0, 0, 2, 2, 1], 2),
    ([1, 1, 1, 1, 1, 1], 1),
    ([0, 1, 1, 1, 2, 1], 1),
    ([0, 0, 1, 2, 2, 1], 1),
    ([1, 1, 1, 1, 2, 1], 1),
    ([0, 1, 1, 2, 2, 1], 1),
    ([0, 0, 2, 2, 2, 1], 2),
    ([1, 1, 1, 2, 2, 1], 1),
    ([0, 1, 2, 2, 2, 1], 1),
    ([1, 1, 2, 2, 2, 1], 1),
    ([0, 2, 2, 2, 2, 1], 2),
    ([1, 2, 2, 2, 2, 1], 1),
    ([2, 2, 2, 2, 2, 1], 2),
];

pub const F4: [([i64; 4], i64); 24] = [
    ([1, 0, 0, 0], 2),
    ([0, 1, 0, 0], 2),
    ([0, 0, 1, 0], 1),
    ([0, 0, 0, 1], 1),
    ([1, 1, 0, 0], 2),
    ([0, 1, 1, 0], 1),
    ([0, 0, 1, 1], 1),
    ([1, 1, 1, 0], 1),
    ([0, 1, 2, 0], 2),
    ([0, 1, 1, 1], 1),
    ([1, 1, 2, 0], 2),
    ([1, 1, 1, 1], 1),
    ([0, 1, 2, 1], 1),
    ([1, 2, 2, 0], 2),
    ([1, 1, 2, 1], 1),
    ([0, 1, 2, 2], 2),
    ([1, 2, 2, 1], 1),
    ([1, 1, 2, 2], 2),
    ([1, 2, 3, 1], 1),
    ([1, 2, 2, 2], 2),
    ([1, 2, 3, 2], 1),
    ([1, 2, 4, 2], 2),
    ([1, 3, 4, 2], 2),
    ([2, 3, 4, 2], 2),
];

/// The eight simple F4 quartets `[r1, r, s, s1]` with short `r1`, and whether
/// `r - r1` and `s - r1` are roots.
pub const F4_SHORT_SIMPLE: [([usize; 4], bool, bool); 8] = [
    ([2, 6, 13, 16], true, false),
    ([2, 3, 18, 19], false, true),
    ([2, 6, 16, 19], true, false),
    ([2, 9, 14, 19], false, true),
    ([2, 11, 12, 19], false, true),
    ([2, 6, 18, 20], true, true),
    ([2, 12, 14, 20], true, true),
    ([3, 6, 9, 12], true, true),
];

/// Table ordinals of the non-simple F4 quartets.
pub const F4_NON_SIMPLE: [usize; 10] = [31, 32, 33, 35, 36, 37, 39, 41, 45, 46];
