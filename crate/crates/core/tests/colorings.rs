mod common;

use proptest::prelude::*;
use rand::{seq::SliceRandom, Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use symbreak::coloring::{
    self, aq3_distinguishing_coloring, aqn_last_bit_coloring, common_neighbors_outside,
    is_color_preserving, is_distinguishing, m_sets, separates_parities, signature_case,
    vertex_signature, Coloring, SignatureCase,
};
use symbreak::graphs::{augmented_cube, graph_power, hypercube, Graph};
use symbreak::perm::{automorphism_group, Budget};
use symbreak::solver::find_distinguishing_coloring;

use common::*;

/// Automorphisms fixing `0⋯0` and `0⋯01` that preserve `c`, by scanning
/// every element of the group.
fn stabilizer_preserving(g: &Graph, c: &Coloring) -> Vec<Vec<usize>> {
    let group = automorphism_group(g, None).unwrap();
    group
        .elements(1 << 12)
        .unwrap()
        .into_iter()
        .filter(|p| p.apply(0) == 0 && p.apply(1) == 1 && is_color_preserving(p, c).unwrap())
        .map(|p| p.images().to_vec())
        .collect()
}

/// A colouring where even and odd vertices (other than the first two) draw
/// from disjoint colour sets.
fn random_hypothesis_coloring(n: usize, rng: &mut ChaCha8Rng) -> Coloring {
    let r = rng.gen_range(2..=4u32);
    let split = rng.gen_range(1..r);
    let mut palette: Vec<u32> = (1..=r).collect();
    palette.shuffle(rng);
    let (even, odd) = palette.split_at(split as usize);
    let colors = (0..1usize << n)
        .map(|v| match v {
            0 | 1 => rng.gen_range(1..=r),
            _ if v & 1 == 0 => even[rng.gen_range(0..even.len())],
            _ => odd[rng.gen_range(0..odd.len())],
        })
        .collect();
    Coloring::new(colors, r).unwrap()
}

#[test]
fn fixing_the_first_two_vertices_forces_identity_on_aq3() {
    let g = augmented_cube(3).unwrap();
    let mut checked = 0;
    for colors in all_colorings(8, 3) {
        let c = Coloring::new(colors, 3).unwrap();
        if !separates_parities(3, &c).unwrap() {
            continue;
        }
        let found = stabilizer_preserving(&g, &c);
        assert_eq!(found.len(), 1, "{:?}", c.colors());
        assert!(is_identity(&found[0]));
        checked += 1;
    }
    assert!(checked > 100);
}

#[test]
fn fixing_the_first_two_vertices_forces_identity_on_aq4_and_aq5() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for n in [4, 5] {
        let g = augmented_cube(n).unwrap();
        let mut colorings = vec![aqn_last_bit_coloring(n).unwrap()];
        colorings.extend((0..150).map(|_| random_hypothesis_coloring(n, &mut rng)));
        for c in colorings {
            assert!(separates_parities(n, &c).unwrap());
            let found = stabilizer_preserving(&g, &c);
            assert_eq!(found.len(), 1, "n = {n}, {:?}", c.colors());
        }
    }
}

#[test]
fn hypothesis_detects_violations() {
    let mut colors = aqn_last_bit_coloring(4).unwrap().colors().to_vec();
    colors[2] = 2; // 0010 now shares a colour with the odd vertices
    let c = Coloring::new(colors, 2).unwrap();
    assert!(!separates_parities(4, &c).unwrap());
    // the first two vertices are exempt
    assert!(separates_parities(4, &aqn_last_bit_coloring(4).unwrap()).unwrap());
}

#[test]
fn signatures_follow_membership() {
    for n in 4..=7 {
        let g = augmented_cube(n).unwrap();
        let c = aqn_last_bit_coloring(n).unwrap();
        let sets = m_sets(&g, n).unwrap();
        let predicted: Vec<_> = SignatureCase::ALL
            .iter()
            .map(|case| case.predicted(n))
            .collect();
        for w in 0..g.n_vertices() {
            let sig = vertex_signature(&g, &c, w).unwrap();
            let case = signature_case(&sets, &c, w);
            assert_eq!(sig, case.predicted(n), "n = {n}, w = {}", g.vertex_name(w));
            assert_eq!(predicted.iter().filter(|&&p| p == sig).count(), 1);
        }
        let m = sets.m();
        assert_eq!(common_neighbors_outside(&g, &m), vec![0], "n = {n}");
        assert_eq!(
            common_neighbors_outside(&g, &sets.m_flipped()),
            vec![1],
            "n = {n}"
        );
    }
}

#[test]
fn explicit_colorings_distinguish() {
    assert!(
        is_distinguishing(&augmented_cube(3).unwrap(), &aq3_distinguishing_coloring()).unwrap()
    );
    for n in 4..=10 {
        let g = augmented_cube(n).unwrap();
        assert!(
            is_distinguishing(&g, &aqn_last_bit_coloring(n).unwrap()).unwrap(),
            "n = {n}"
        );
    }
}

#[test]
fn no_two_coloring_distinguishes_aq3() {
    let g = augmented_cube(3).unwrap();
    let auts = brute_automorphisms(&g);
    for colors in all_colorings(8, 2) {
        let c = Coloring::new(colors.clone(), 2).unwrap();
        assert!(!is_distinguishing(&g, &c).unwrap());
        assert!(!brute_distinguishing(&auts, &colors));
    }
}

#[test]
fn twin_sharing_a_colour_is_reported() {
    let g = augmented_cube(3).unwrap();
    for x in 0..8usize {
        let star = x ^ 0b011;
        let colors: Vec<u32> = (0..8)
            .map(|v| {
                if v == star {
                    x as u32 + 1
                } else {
                    v as u32 + 1
                }
            })
            .collect();
        let c = Coloring::from_colors(colors).unwrap();
        let p = coloring::smallest_violation(&g, &c, Budget::default())
            .unwrap()
            .unwrap();
        assert_eq!(p.cycles(), vec![vec![x.min(star), x.max(star)]]);
    }
}

/// A distinguishing colouring of `Q_n^2` also distinguishes `Q_n`, since
/// every automorphism of `Q_n` is one of `Q_n^2`.
#[test]
fn witnesses_for_the_square_distinguish_the_cube() {
    for n in [4, 5] {
        let q = hypercube(n).unwrap();
        let square = graph_power(&q, 2).unwrap();
        for seed in 0..5 {
            let c =
                find_distinguishing_coloring(&square, 2, symbreak::Strategy::Random, seed, None)
                    .unwrap()
                    .unwrap();
            assert!(is_distinguishing(&q, &c).unwrap(), "n = {n}, seed = {seed}");
        }
    }
}

fn renaming() -> impl Strategy<Value = Vec<u32>> {
    Just(vec![1u32, 2, 3]).prop_shuffle()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn renaming_colours_keeps_aq3_verdict(colors in prop::collection::vec(1u32..=3, 8), bijection in renaming()) {
        let g = augmented_cube(3).unwrap();
        let c = Coloring::new(colors, 3).unwrap();
        let renamed = c.rename(&bijection).unwrap();
        prop_assert_eq!(is_distinguishing(&g, &c).unwrap(), is_distinguishing(&g, &renamed).unwrap());
    }

    #[test]
    fn renaming_colours_keeps_q4_verdict(colors in prop::collection::vec(1u32..=3, 16), bijection in renaming()) {
        let g = hypercube(4).unwrap();
        let c = Coloring::new(colors, 3).unwrap();
        let renamed = c.rename(&bijection).unwrap();
        prop_assert_eq!(is_distinguishing(&g, &c).unwrap(), is_distinguishing(&g, &renamed).unwrap());
    }

    #[test]
    fn coloring_files_round_trip(colors in prop::collection::vec(1u32..=4, 16)) {
        let g = hypercube(4).unwrap();
        let c = Coloring::new(colors, 4).unwrap();
        let text = coloring::io::to_json(&g, &c).unwrap();
        prop_assert_eq!(coloring::io::from_json(&g, &text).unwrap(), c);
    }

    #[test]
    fn reported_violations_preserve_colours(colors in prop::collection::vec(1u32..=2, 16)) {
        let g = hypercube(4).unwrap();
        let c = Coloring::new(colors, 2).unwrap();
        match coloring::smallest_violation(&g, &c, Budget::default()).unwrap() {
            Some(p) => {
                prop_assert!(!p.is_identity());
                prop_assert!(symbreak::is_automorphism(&g, &p).unwrap());
                prop_assert!(is_color_preserving(&p, &c).unwrap());
            }
            None => prop_assert!(is_distinguishing(&g, &c).unwrap()),
        }
    }
}
