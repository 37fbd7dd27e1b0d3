// End-to-end checks of the command-line surface: output fragments and the
// documented exit codes (0 ok, 1 verification failure, 2 usage, 3 resource).
// The binary path arrives as argv[1].

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <sys/wait.h>

namespace {

int failures = 0;

struct RunResult {
    int exit_code = -1;
    std::string output;  // stdout only
};

RunResult run(const std::string& command) {
    RunResult result;
    FILE* pipe = popen(command.c_str(), "r");
    if (!pipe) {
        std::cerr << "popen failed for: " << command << "\n";
        ++failures;
        return result;
    }
    std::array<char, 4096> buf{};
    std::size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0)
        result.output.append(buf.data(), got);
    int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

void expect(bool ok, const std::string& what) {
    if (!ok) {
        std::cerr << "FAIL: " << what << "\n";
        ++failures;
    }
}

void expect_exit(const RunResult& r, int code, const std::string& what) {
    if (r.exit_code != code) {
        std::cerr << "FAIL: " << what << ": exit " << r.exit_code << ", expected "
                  << code << "\n";
        ++failures;
    }
}

bool contains(const std::string& hay, const std::string& needle) {
    return hay.find(needle) != std::string::npos;
}

}  // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::cerr << "usage: test_cli <path-to-etalab-binary>\n";
        return 1;
    }
    const std::string bin = argv[1];
    const std::string quiet = " 2>/dev/null";

    // eta
    RunResult r = run(bin + " eta \"product(cyclic(4),cyclic(2))\"");
    expect_exit(r, 0, "eta C4xC2");
    expect(contains(r.output, "eta = 4"), "eta C4xC2 output");

    r = run(bin + " eta \"quaternion(8)\"");
    expect_exit(r, 0, "eta Q8");
    expect(contains(r.output, "eta = 3"), "eta Q8 output");

    r = run(bin + " eta \"cyclic(8)\"");
    expect_exit(r, 0, "eta C8");
    expect(contains(r.output, "eta = 1 (cyclic; covering degenerate)"),
           "eta C8 degenerate note");

    r = run(bin + " eta \"dihedral(8)\" --verbose");
    expect(contains(r.output, "class 1:"), "eta verbose lists classes");

    r = run(bin + " eta \"dihedral(8)\" --format structured");
    expect(contains(r.output, "\"eta\": 3"), "eta structured");

    // exit code 2 on parse errors, 3 on resource limits
    r = run(bin + " eta \"cyclic(\"" + quiet);
    expect_exit(r, 2, "eta parse error");
    r = run(bin + " eta \"heisenberg(2)\"" + quiet);
    expect_exit(r, 2, "eta constraint error");
    r = run(bin + " eta \"cyclic(6000)\"" + quiet);
    expect_exit(r, 3, "eta over max order");
    r = run("ETALAB_MAX_ORDER=10 " + bin + " eta \"cyclic(16)\"" + quiet);
    expect_exit(r, 3, "eta over env max order");
    r = run(bin + " eta \"cyclic(16)\" --max-order 10" + quiet);
    expect_exit(r, 3, "eta over flag max order");
    r = run(bin + " eta \"cyclic(2)\" --max-order 1" + quiet);
    expect_exit(r, 2, "max-order below 2 is a usage error");

    // invariants
    r = run(bin + " invariants \"dihedral(16)\"");
    expect_exit(r, 0, "invariants D16");
    expect(contains(r.output, "class: 3"), "invariants class");
    expect(contains(r.output, "series orders: 16,4,2,1"), "invariants series");

    r = run(bin + " invariants \"heisenberg(3)\" --format structured");
    expect_exit(r, 0, "invariants heis3 structured");
    expect(contains(r.output, "\"class\": 2"), "invariants heis3 class");
    expect(contains(r.output, "\"center_order\": 3"), "invariants heis3 center");

    r = run(bin + " invariants \"cyclic(9)\"");
    expect(contains(r.output, "class: 1"), "invariants C9 class");

    r = run(bin + " invariants \"dihedral(6)\"");
    expect_exit(r, 0, "invariants S3");
    expect(contains(r.output, "class: not nilpotent"), "invariants S3 not nilpotent");

    // verify
    r = run(bin + " verify --suite oracle-cross --max-order 32 --primes 2");
    expect_exit(r, 0, "verify oracle-cross");
    expect(contains(r.output, "totals:"), "verify human totals");

    r = run(bin + " verify --suite main-theorem --max-order 64 --primes 2,3 --format csv");
    expect_exit(r, 0, "verify main-theorem csv");
    expect(r.output.rfind("spec,p,n,l,eta,bound_num,bound_den,pass\n", 0) == 0,
           "verify csv header");

    r = run(bin + " verify --suite bogus --max-order 16" + quiet);
    expect_exit(r, 2, "verify unknown suite");

    r = run(bin + " verify --suite gp-minimum --max-order 16 --format structured");
    expect_exit(r, 0, "verify gp-minimum structured");
    expect(contains(r.output, "\"suite\": \"gp-minimum\""), "verify json suite field");

    r = run(bin + " verify --suite eta-families --max-order 4 --primes 5" + quiet);
    expect_exit(r, 2, "verify empty catalog is a usage error");

    // --out writes the report to a file
    const std::string out_path = "cli_report.json";
    r = run(bin + " verify --suite lemma-orders --max-order 32 --primes 2 --format structured --out " +
            out_path);
    expect_exit(r, 0, "verify --out");
    {
        std::ifstream in(out_path);
        std::string content((std::istreambuf_iterator<char>(in)),
                            std::istreambuf_iterator<char>());
        expect(contains(content, "\"suite\": \"lemma-orders\""), "verify --out content");
        std::remove(out_path.c_str());
    }

    // table
    r = run(bin + " table --family pxp --p 2 --amax 4");
    expect_exit(r, 0, "table pxp");
    expect(r.output.rfind("p,a,b,eta,g_p,match\n", 0) == 0, "table pxp header");
    expect(contains(r.output, "2,2,1,4,4,true"), "table pxp row");

    r = run(bin + " table --family pxp --p 3 --amax 3");
    expect(contains(r.output, "3,2,1,6,6,true"), "table pxp p=3 row");

    r = run(bin + " table --family bound-grid --p 2 --nmax 6 --lmax 3");
    expect_exit(r, 0, "table bound-grid");
    expect(contains(r.output, "2,4,3,7,3"), "table bound-grid row");

    r = run(bin + " table --family pxp --p 2 --amax 9 --bmax 9 --max-order 64");
    expect(contains(r.output, "skipped"), "table marks over-limit rows skipped");

    r = run(bin + " table --family nope --p 2" + quiet);
    expect_exit(r, 2, "table unknown family");

    // GTBL files work wherever a spec is accepted
    {
        std::ofstream gt("cli_c3.gtbl");
        gt << "gtbl 1 3\n0 1 2\n1 2 0\n2 0 1\n";
    }
    r = run(bin + " eta \"table(cli_c3.gtbl)\"");
    expect_exit(r, 0, "eta from GTBL file");
    expect(contains(r.output, "eta = 1"), "eta from GTBL value");
    std::remove("cli_c3.gtbl");

    if (failures == 0) {
        std::cout << "test_cli: all checks passed\n";
        return 0;
    }
    std::cerr << "test_cli: " << failures << " failures\n";
    return 1;
}
