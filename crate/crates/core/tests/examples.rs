macro_rules! example {
    ($m:ident, $file:literal, $test:ident) => {
        mod $m {
            include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/", $file));
        }

        #[test]
        fn $test() {
            $m::run_example().expect(concat!($file, " should run"));
        }
    };
}

example!(
    geodesic,
    "geodesic_normal_forms.rs",
    geodesic_normal_forms_runs
);
example!(
    membership,
    "interval_membership.rs",
    interval_membership_runs
);
example!(lattice, "lattice_operations.rs", lattice_operations_runs);
example!(garside, "garside_normal_form.rs", garside_normal_form_runs);
example!(wp, "word_problem.rs", word_problem_runs);
example!(artin, "artin_maps.rs", artin_maps_runs);
example!(dot, "atom_graph_dot.rs", atom_graph_dot_runs);
