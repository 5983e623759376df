#![allow(dead_code)]

mod base_change {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/base_change.rs"));

    #[test]
    fn runs() {
        run_example().expect("example should run");
    }
}

mod center_kernel {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/center_kernel.rs"));

    #[test]
    fn runs() {
        run_example().expect("example should run");
    }
}

mod cli_instance {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/cli_instance.rs"));

    #[test]
    fn runs() {
        run_example().expect("example should run");
    }
}

mod congruent_iso {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/congruent_iso.rs"));

    #[test]
    fn runs() {
        run_example().expect("example should run");
    }
}

mod conic {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/conic.rs"));

    #[test]
    fn runs() {
        run_example().expect("example should run");
    }
}

mod exceptional {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/exceptional.rs"));

    #[test]
    fn runs() {
        run_example().expect("example should run");
    }
}

mod finite_oracle {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/finite_oracle.rs"));

    #[test]
    fn runs() {
        run_example().expect("example should run");
    }
}

mod forget {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/forget.rs"));

    #[test]
    fn runs() {
        run_example().expect("example should run");
    }
}

mod ideals {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/ideals.rs"));

    #[test]
    fn runs() {
        run_example().expect("example should run");
    }
}

mod iterate {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/iterate.rs"));

    #[test]
    fn runs() {
        run_example().expect("example should run");
    }
}

mod localize {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/localize.rs"));

    #[test]
    fn runs() {
        run_example().expect("example should run");
    }
}

mod module_dilatation {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/module_dilatation.rs"));

    #[test]
    fn runs() {
        run_example().expect("example should run");
    }
}

mod monopoly {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/monopoly.rs"));

    #[test]
    fn runs() {
        run_example().expect("example should run");
    }
}

mod normalize_center {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/normalize_center.rs"));

    #[test]
    fn runs() {
        run_example().expect("example should run");
    }
}

mod normalizer {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/normalizer.rs"));

    #[test]
    fn runs() {
        run_example().expect("example should run");
    }
}

mod open_immersion {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/open_immersion.rs"));

    #[test]
    fn runs() {
        run_example().expect("example should run");
    }
}

mod oracle_bridge {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/oracle_bridge.rs"));

    #[test]
    fn runs() {
        run_example().expect("example should run");
    }
}

mod present_dilatation {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/present_dilatation.rs"));

    #[test]
    fn runs() {
        run_example().expect("example should run");
    }
}

mod rost_space {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/rost_space.rs"));

    #[test]
    fn runs() {
        run_example().expect("example should run");
    }
}

mod two_stage {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/two_stage.rs"));

    #[test]
    fn runs() {
        run_example().expect("example should run");
    }
}

mod universal_property {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/universal_property.rs"));

    #[test]
    fn runs() {
        run_example().expect("example should run");
    }
}

mod universal_scan {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/universal_scan.rs"));

    #[test]
    fn runs() {
        run_example().expect("example should run");
    }
}
