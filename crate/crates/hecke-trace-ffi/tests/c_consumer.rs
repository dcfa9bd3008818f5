//! Compiles and runs a small C program against the generated header and the
//! built static library, exercising the ABI the way a foreign consumer
//! would. Skips (with a message) when no C compiler is on PATH.

use std::path::PathBuf;
use std::process::Command;

const C_SOURCE: &str = r#"
#include <assert.h>
#include <stdio.h>
#include <string.h>
#include "hecke_trace.h"

int main(void) {
    int64_t lambda[2] = {2, 1};
    HeckeLaurent *a = NULL, *b = NULL;
    assert(hecke_trace_kostant(3, lambda, 2, &a) == HECKE_STATUS_OK);
    assert(hecke_trace_residue(3, lambda, 2, &b) == HECKE_STATUS_OK);
    assert(hecke_laurent_eq(a, b));
    char *s = hecke_laurent_to_string(a);
    assert(strcmp(s, "q^3 - 3*q^2 + 3*q - 2 + 3*q^-1 - 3*q^-2 + q^-3") == 0);
    hecke_string_free(s);
    hecke_laurent_free(b);

    int64_t boundary[2] = {1, 1};
    assert(hecke_trace_product(3, boundary, 2, &b) ==
           HECKE_STATUS_NOT_IN_CHAMBER_INTERIOR);
    HeckeChamberKind kind;
    uint32_t m;
    assert(hecke_classify_chamber(3, boundary, 2, &kind, &m) == HECKE_STATUS_OK);
    assert(kind == HECKE_CHAMBER_KIND_BOUNDARY);

    hecke_laurent_free(a);
    printf("c consumer ok\n");
    return 0;
}
"#;

/// target/<profile>/deps/<test-bin> -> target/<profile>
fn profile_dir() -> PathBuf {
    let exe = std::env::current_exe().expect("test executable path");
    exe.parent()
        .and_then(|deps| deps.parent())
        .expect("profile directory")
        .to_path_buf()
}

#[test]
fn c_consumer_compiles_links_and_runs() {
    let compiler = ["cc", "gcc", "clang"]
        .into_iter()
        .find(|c| {
            Command::new(c)
                .arg("--version")
                .output()
                .map(|o| o.status.success())
                .unwrap_or(false)
        });
    let Some(compiler) = compiler else {
        eprintln!("no C compiler on PATH; skipping the link test");
        return;
    };

    let staticlib = profile_dir().join("libhecke_trace_ffi.a");
    assert!(
        staticlib.exists(),
        "static library missing at {staticlib:?}; it is built with the lib target"
    );
    let include_dir = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("include");

    let work = tempfile::tempdir().expect("temp dir");
    let c_path = work.path().join("consumer.c");
    let bin_path = work.path().join("consumer");
    std::fs::write(&c_path, C_SOURCE).expect("write C source");

    let compile = Command::new(compiler)
        .arg("-o")
        .arg(&bin_path)
        .arg(&c_path)
        .arg("-I")
        .arg(&include_dir)
        .arg(&staticlib)
        .args(["-lm", "-lpthread", "-ldl"])
        .output()
        .expect("compiler runs");
    assert!(
        compile.status.success(),
        "compile failed:\n{}",
        String::from_utf8_lossy(&compile.stderr)
    );

    let run = Command::new(&bin_path).output().expect("consumer runs");
    assert!(run.status.success(), "consumer exited nonzero");
    assert_eq!(String::from_utf8_lossy(&run.stdout).trim(), "c consumer ok");
}
