//! Previously published permutation automorphism groups for a few
//! small codes, kept so audits can compare them with exhaustive scans.
//!
//! Permutations are written in 1-based cycle notation. Every recorded
//! listing is closed under inversion in cycle form, so its meaning does not
//! depend on whether a cycle is read as "takes from" or "sends to".

use std::collections::BTreeSet;

use z2z4::{AdditiveCode, Perm, PermPair};

type Cycles = &'static [&'static [usize]];

struct RecordedListing {
    alpha: usize,
    beta: usize,
    generators: &'static [&'static str],
    elements: &'static [(Cycles, Cycles)],
}

const E: Cycles = &[];

const LISTINGS: &[RecordedListing] = &[
    RecordedListing {
        alpha: 4,
        beta: 4,
        generators: &["1010|1213"],
        elements: &[(E, E), (&[&[1, 3]], E), (&[&[2, 4]], E), (E, &[&[1, 3]])],
    },
    RecordedListing {
        alpha: 2,
        beta: 2,
        generators: &["10|11", "11|31"],
        elements: &[(E, E), (E, &[&[1, 2]])],
    },
    RecordedListing {
        alpha: 4,
        beta: 4,
        generators: &["1101|1231"],
        elements: &[
            (E, E),
            (&[&[1, 2]], E),
            (&[&[2, 4]], E),
            (&[&[1, 4]], E),
            (&[&[1, 2, 4]], E),
            (&[&[1, 4, 2]], E),
            (E, &[&[1, 4]]),
            (&[&[1, 2]], &[&[1, 4]]),
            (&[&[2, 4]], &[&[1, 4]]),
            (&[&[1, 4]], &[&[1, 4]]),
            (&[&[1, 2, 4]], &[&[1, 4]]),
            (&[&[1, 4, 2]], &[&[1, 4]]),
        ],
    },
];

/// The recorded PAut listing for a code with the same codeword set, if any.
pub fn recorded_paut_listing(code: &AdditiveCode, limit: u128) -> Option<BTreeSet<PermPair>> {
    let words = code.enumerate(limit).ok()?;
    for listing in LISTINGS {
        if (listing.alpha, listing.beta) != code.shape() {
            continue;
        }
        let gens = listing.generators.iter().map(|g| z2z4::word(g)).collect();
        let known = AdditiveCode::new(listing.alpha, listing.beta, gens).ok()?;
        if *known.enumerate(limit).ok()? != *words {
            continue;
        }
        return Some(
            listing
                .elements
                .iter()
                .map(|(s, t)| {
                    PermPair::new(
                        Perm::from_cycles(listing.alpha, s).expect("valid cycles"),
                        Perm::from_cycles(listing.beta, t).expect("valid cycles"),
                    )
                })
                .collect(),
        );
    }
    None
}
