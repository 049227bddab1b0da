#include <doctest.h>

#include <cstdio>
#include <string>
#include <sys/wait.h>

#include <json.hpp>

using nlohmann::json;

namespace {

struct CmdResult {
    int status;
    std::string out;
};

CmdResult run_cli(const std::string& args) {
    const std::string cmd = std::string(LEMNI_CLI_PATH) + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[4096];
    std::size_t n;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0)
        out.append(buf, n);
    const int raw = pclose(pipe);
    REQUIRE(WIFEXITED(raw));
    return {WEXITSTATUS(raw), out};
}

} // namespace

TEST_CASE("cli constants json") {
    const CmdResult r = run_cli("constants");
    REQUIRE(r.status == 0);
    const json j = json::parse(r.out);
    CHECK(j["omega"].get<double>() ==
          doctest::Approx(1.8540746773013719184).epsilon(1e-14));
    CHECK(j["omega_over_sqrt2"].get<double>() ==
          doctest::Approx(1.3110287771460599052).epsilon(1e-14));
    CHECK(j["picard_radius"].get<double>() ==
          doctest::Approx(4.0 / 27.0).epsilon(1e-15));
    CHECK(j["scalar_radius"].get<double>() ==
          doctest::Approx(0.62040323940139973263).epsilon(1e-14));
    CHECK(j["g2"] == 1.0);
    CHECK(j["g3"] == 0.0);
    REQUIRE(j["periods"].size() == 2);
    CHECK(j["periods"][0][0].get<double>() ==
          doctest::Approx(2.0 * 1.8540746773013719184).epsilon(1e-14));
    CHECK(j["periods"][0][1] == 0.0);
    CHECK(j["periods"][1][0] == 0.0);
}

TEST_CASE("cli constants csv honors digits") {
    const CmdResult r = run_cli("--format csv --digits 12 constants");
    REQUIRE(r.status == 0);
    CHECK(r.out.find("key,value\n") == 0);
    CHECK(r.out.find("omega,1.8540746773\n") != std::string::npos);
    CHECK(r.out.find("period_2,0+3.7081493546i") != std::string::npos);
    // Global options may follow the subcommand as well.
    const CmdResult r2 = run_cli("constants --format csv --digits 12");
    CHECK(r2.out == r.out);
}

TEST_CASE("cli eval") {
    const CmdResult r = run_cli("eval --fn s --z 0.5");
    REQUIRE(r.status == 0);
    const json j = json::parse(r.out);
    CHECK(j["fn"] == "s");
    CHECK(j["z"][0] == 0.5);
    CHECK(j["z"][1] == 0.0);
    CHECK(j["value"][0].get<double>() ==
          doctest::Approx(0.49538846006341751415).epsilon(1e-14));
    CHECK(j["value"][1] == 0.0);

    const CmdResult c = run_cli("eval --fn sd --z 0.3+0.2i --format csv --digits 17");
    REQUIRE(c.status == 0);
    CHECK(c.out.find("re_z,im_z,re_f,im_f\n") == 0);
    CHECK(c.out.find("0.300149279372560") != std::string::npos);

    // The series functions reach past |z| = 1.05 thanks to the deep order.
    const CmdResult far = run_cli("eval --fn c --z 1.2");
    REQUIRE(far.status == 0);
    CHECK(json::parse(far.out)["value"][0].get<double>() != 0.0);
}

TEST_CASE("cli eval exit codes") {
    CHECK(run_cli("eval --fn wp --z 1e-12").status == 3);
    CHECK(run_cli("eval --fn s --z 1.31").status == 3);
    CHECK(run_cli("eval --fn s").status == 2);
    CHECK(run_cli("eval --fn nope --z 1").status == 2);
    CHECK(run_cli("eval --fn s --z abc").status == 2);
    CHECK(run_cli("").status == 2);
    CHECK(run_cli("frobnicate").status == 2);
    const CmdResult r = run_cli("eval --fn wp --z 1e-12");
    CHECK(r.out.find("lattice point") != std::string::npos);
}

TEST_CASE("cli coeffs") {
    const CmdResult r = run_cli("--format csv coeffs --n 4");
    REQUIRE(r.status == 0);
    CHECK(r.out ==
          "n,a_n,b_n\n"
          "0,0,1\n"
          "1,1,0\n"
          "2,0,0\n"
          "3,0,0\n"
          "4,0,-0.25\n");
    const CmdResult j = run_cli("coeffs --n 5");
    REQUIRE(j.status == 0);
    const json rows = json::parse(j.out);
    REQUIRE(rows.size() == 6);
    CHECK(rows[5][0] == 5);
    CHECK(rows[5][1].get<double>() == doctest::Approx(-0.15).epsilon(1e-15));
    CHECK(rows[5][2] == 0.0);
    CHECK(run_cli("coeffs --n 0").status == 2);
}

TEST_CASE("cli poles") {
    const CmdResult r = run_cli("poles --m 0 0 --n 0 0");
    REQUIRE(r.status == 0);
    const json rows = json::parse(r.out);
    REQUIRE(rows.size() == 4);
    const double hw = 0.5 * 1.8540746773013719184;
    CHECK(rows[0][0] == 0);
    CHECK(rows[0][1] == 0);
    CHECK(rows[0][2].get<double>() == doctest::Approx(hw).epsilon(1e-14));
    CHECK(rows[0][3].get<double>() == doctest::Approx(hw).epsilon(1e-14));
    CHECK(rows[1][3].get<double>() == doctest::Approx(-hw).epsilon(1e-14));

    const CmdResult csv = run_cli("--format csv poles --m -1 1 --n 0 0");
    REQUIRE(csv.status == 0);
    CHECK(csv.out.find("m,n,re,im\n") == 0);
    // 3 m-values x 1 n-value x 4 base points + header.
    int lines = 0;
    for (const char ch : csv.out)
        if (ch == '\n')
            ++lines;
    CHECK(lines == 13);

    CHECK(run_cli("poles --m 1 0 --n 0 0").status == 2);
}

TEST_CASE("cli grid") {
    const CmdResult r = run_cli("grid --fn s --points 2 --half-width 0.1");
    REQUIRE(r.status == 0);
    const json rows = json::parse(r.out);
    REQUIRE(rows.size() == 4);
    // Row-major from the bottom-left corner.
    CHECK(rows[0][0] == -0.1);
    CHECK(rows[0][1] == -0.1);
    CHECK(rows[3][0] == 0.1);
    CHECK(rows[3][1] == 0.1);
    for (const auto& row : rows)
        CHECK(!row[2].is_null());

    // wp over a grid containing the origin: the pole row is excluded, not
    // fatal.
    const CmdResult w = run_cli(
        "--format csv grid --fn wp --points 3 --half-width 1.0");
    REQUIRE(w.status == 0);
    CHECK(w.out.find("re_z,im_z,re_f,im_f,excluded\n") == 0);
    CHECK(w.out.find(",,1\n") != std::string::npos);

    const CmdResult e = run_cli(
        "grid --fn S --points 3 --half-width 0.4 "
        "--center 0.92703733865+0.92703733865i --exclusion 0.45");
    REQUIRE(e.status == 0);
    const json erows = json::parse(e.out);
    REQUIRE(erows.size() == 9);
    CHECK(erows[4][2].is_null());  // the center sits on a pole

    CHECK(run_cli("grid --fn s --points 1 --half-width 0.1").status == 2);
    CHECK(run_cli("grid --fn s --points 3 --half-width 0").status == 2);
}

TEST_CASE("cli verify") {
    const CmdResult one = run_cli("verify --suite quartic");
    REQUIRE(one.status == 0);
    const json arr = json::parse(one.out);
    REQUIRE(arr.is_array());
    REQUIRE(arr.size() == 1);
    CHECK(arr[0]["suite"] == "quartic");
    CHECK(arr[0]["passed"] == true);

    const CmdResult multi = run_cli("verify --suite quartic --suite wp_ode");
    REQUIRE(multi.status == 0);
    CHECK(json::parse(multi.out).size() == 2);

    const CmdResult fail = run_cli("verify --suite quartic --tol quartic=1e-30");
    CHECK(fail.status == 1);
    const json farr = json::parse(fail.out);
    CHECK(farr[0]["tolerance"] == 1e-30);
    CHECK(farr[0]["passed"] == false);

    const CmdResult strict = run_cli("verify --suite wp_ode --profile strict");
    REQUIRE(strict.status <= 1);
    const json sarr = json::parse(strict.out);
    CHECK(sarr[0]["tolerance"].get<double>() ==
          doctest::Approx(1e-10).epsilon(1e-12));

    CHECK(run_cli("verify --suite nope").status == 2);
    CHECK(run_cli("verify --suite quartic --tol quartic=abc").status == 2);
    CHECK(run_cli("verify --suite quartic --tol nope=1e-9").status == 2);
    CHECK(run_cli("verify").status == 2);

    const CmdResult csv = run_cli("--format csv verify --suite reality");
    REQUIRE(csv.status == 0);
    CHECK(csv.out.find("suite,samples_evaluated,") == 0);
    CHECK(csv.out.find("reality,") != std::string::npos);

    // Determinism across processes.
    const CmdResult a = run_cli("verify --suite sd_oracle");
    const CmdResult b = run_cli("verify --suite sd_oracle");
    CHECK(a.out == b.out);
}
