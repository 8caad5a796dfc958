use proptest::prelude::*;

use lec::cip::{apply_interchange, validate_cip};
use lec::colouring::{check_edge_colouring, check_partial_properness, check_total_colouring, PartialEdgeColoring};
use lec::generate::random_graph;
use lec::hall::check_hall_edge_condition;
use lec::lists::{random_lists, random_total_lists};
use lec::oracle::{list_edge_colourable, matching_number, Decision, OracleBudget};
use lec::solver::{colour_edges, colour_edges_with, total_colour_lists, SolveOptions};
use lec::{Color, Graph};

fn graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n, 1..=9u32, any::<u64>()).prop_map(|(n, p, seed)| random_graph(n, f64::from(p) / 10.0, seed))
}

fn as_partial(colours: &[Color]) -> Vec<Option<Color>> {
    colours.iter().copied().map(Some).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn edge_list_round_trip(g in graph(15)) {
        let back = Graph::from_edge_list(&g.to_edge_list()).unwrap();
        prop_assert_eq!(back.vertex_count(), g.vertex_count());
        prop_assert_eq!(back.edges(), g.edges());
    }

    #[test]
    fn solver_output_is_a_proper_list_colouring(g in graph(25), extra in 0usize..6, seed in any::<u64>()) {
        let k = g.max_degree() + 2;
        let lists = random_lists(&g, k, k + extra, seed).unwrap();
        let report = colour_edges(&g, &lists).unwrap();
        check_edge_colouring(&g, &lists, &as_partial(&report.colouring)).unwrap();
        prop_assert_eq!(report.summary().tripwires, 0);
    }

    #[test]
    fn harvested_cips_validate_and_interchange_cleanly(g in graph(14), seed in any::<u64>()) {
        let k = g.max_degree() + 1;
        let lists = random_lists(&g, k, k + 1, seed).unwrap();
        let opts = SolveOptions { force: true, harvest: true, ..Default::default() };
        if let Ok(report) = colour_edges_with(&g, &lists, &opts) {
            for h in &report.harvested {
                let Some(cip) = &h.found else { continue };
                let col = PartialEdgeColoring::from_colours(&g, &h.colours).unwrap();
                validate_cip(&g, &lists, &col, cip).unwrap();
                let after = apply_interchange(&g, &lists, &col, cip).unwrap();
                check_partial_properness(&g, after.colours()).unwrap();
                prop_assert_eq!(after.coloured_count(), col.coloured_count());
            }
        }
    }

    #[test]
    fn solver_success_implies_oracle_yes_and_hall(g in graph(7), seed in any::<u64>()) {
        prop_assume!(g.edge_count() <= 14);
        let k = g.max_degree().max(1);
        let lists = random_lists(&g, k, k + 2, seed).unwrap();
        let opts = SolveOptions { force: true, ..Default::default() };
        let decision = list_edge_colourable(&g, &lists, OracleBudget::default()).unwrap();
        if let Decision::Yes(w) = &decision {
            check_edge_colouring(&g, &lists, &as_partial(w)).unwrap();
            prop_assert!(check_hall_edge_condition(&g, &lists).unwrap().is_satisfied());
        }
        if colour_edges_with(&g, &lists, &opts).is_ok() {
            prop_assert!(decision.is_yes());
        }
    }

    #[test]
    fn matching_fits_in_half_the_vertices(g in graph(20)) {
        let m = matching_number(&g);
        prop_assert!(2 * m <= g.vertex_count());
        prop_assert_eq!(m == 0, g.edge_count() == 0);
    }

    #[test]
    fn total_colouring_from_four_extra_colours(g in graph(15), extra in 0usize..4, seed in any::<u64>()) {
        let k = g.max_degree() + 4;
        let lists = random_total_lists(&g, k, k + extra, seed).unwrap();
        let tc = total_colour_lists(&g, &lists).unwrap();
        check_total_colouring(&g, &lists, &tc).unwrap();
    }
}
