/*
   Copyright 2026 The superhoch Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

// Drives the installed command line tool as a subprocess.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

namespace {

const std::string kCli = SUPERHOCH_CLI;
const std::string kData = SUPERHOCH_DATA;

struct Result {
    std::string out;
    int status = -1;
};

Result run(const std::string& args, const std::string& env = "") {
    Result r;
    std::string cmd = env + (env.empty() ? "" : " ") + "'" + kCli + "' " + args + " 2>/dev/null";
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    std::array<char, 4096> buf{};
    std::size_t k;
    while ((k = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), k);
    int st = pclose(p);
    r.status = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
    return r;
}

std::string data(const std::string& f) { return "'" + kData + "/" + f + "'"; }

std::string write_tmp(const std::string& name, const std::string& text) {
    std::ofstream(name, std::ios::binary) << text;
    return "'" + name + "'";
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::stringstream s;
    s << in.rdbuf();
    return s.str();
}

}  // namespace

TEST_CASE("validate") {
    CHECK(run("validate " + data("m11.json")).status == 0);
    std::string bad = write_tmp("cli_bad_alg.json",
                                R"({"field":"Q","dim":2,"parity":[0,1],"table":[[[[0,"1"]],[[1,"1"]]],[[[1,"1"]],[[1,"1"]]]]})");
    Result r = run("validate " + bad);
    CHECK(r.status == 1);
    CHECK(r.out.find("grading") != std::string::npos);
    CHECK(run("validate " + write_tmp("cli_broken.json", "{")).status == 2);
    CHECK(run("validate /nonexistent/file.json").status == 2);
    CHECK(run("").status != 0);
}

TEST_CASE("cohomology table and JSON") {
    Result t = run("cohomology " + data("lambda_eps.json") + " --max-arity 1");
    REQUIRE(t.status == 0);
    CHECK(t.out.find("field Q") != std::string::npos);
    Result j = run("cohomology " + data("lambda_eps.json") + " --max-arity 1 --parity 1 --json --representatives");
    REQUIRE(j.status == 0);
    CHECK(j.out.find("\"representatives\"") != std::string::npos);
    CHECK(run("cohomology " + data("cl1.json") + " --max-arity 9").status == 2);
    CHECK(run("cohomology " + data("cl1.json") + " --parity 2").status != 0);
}

TEST_CASE("field override by flag and environment") {
    Result flag = run("--field Fp:2 cohomology " + data("cl1.json") + " --max-arity 0 --json");
    REQUIRE(flag.status == 0);
    CHECK(flag.out.find("\"Fp\": 2") != std::string::npos);
    Result env = run("cohomology " + data("cl1.json") + " --max-arity 0", "SUPERHOCH_FIELD=Fp:3");
    REQUIRE(env.status == 0);
    CHECK(env.out.find("Fp:3") != std::string::npos);
    CHECK(run("--field Fp:4 validate " + data("cl1.json")).status == 2);
}

TEST_CASE("products on cochain files") {
    std::string f = write_tmp("cli_f.json", R"({"arity":1,"parity":1,"entries":[{"idx":[1],"out":0,"val":"1"}]})");
    Result cup = run("cup " + data("lambda_eps.json") + " " + f + " " + f);
    REQUIRE(cup.status == 0);
    CHECK(cup.out.find("\"-1\"") != std::string::npos);
    CHECK(run("delta " + data("lambda_eps.json") + " " + f).status == 0);
    CHECK(run("circ " + data("lambda_eps.json") + " " + f + " " + f + " --i 0").status == 0);
    CHECK(run("circ " + data("lambda_eps.json") + " " + f + " " + f + " --i 4").status == 2);
    CHECK(run("bracket " + data("lambda_eps.json") + " " + f + " " + f).status == 0);
    // forbidden entry for the declared parity
    std::string g = write_tmp("cli_g.json", R"({"arity":1,"parity":0,"entries":[{"idx":[1],"out":0,"val":"1"}]})");
    CHECK(run("delta " + data("lambda_eps.json") + " " + g).status == 2);
}

TEST_CASE("audit") {
    Result r = run("audit " + data("cl1.json") + " --seed 3 --trials 5");
    CHECK(r.status == 0);
    CHECK(r.out.find("\"passed\": true") != std::string::npos);
    CHECK(run("audit " + data("cl1.json") + " --seed 3 --trials 5").out == r.out);
}

TEST_CASE("deformations") {
    std::string alg = data("dual_even.json"), def = data("dual_even_deformation.json");
    CHECK(run("deform check " + alg + " " + def).status == 0);
    Result ob = run("deform obstruct " + alg + " " + def);
    CHECK(ob.status == 0);
    Result ext = run("deform extend " + alg + " " + def);
    REQUIRE(ext.status == 0);
    CHECK(ext.out.find("\"order\": 2") != std::string::npos);
    std::string bad = write_tmp("cli_bad_def.json",
                                R"({"order":1,"terms":[{"arity":2,"parity":0,"entries":[{"idx":[0,0],"out":0,"val":"1"}]}]})");
    CHECK(run("deform check " + alg + " " + bad).status == 1);
    CHECK(run("deform obstruct " + alg + " " + bad).status == 2);
    Result blocked = run("deform extend " + data("sq_lambda.json") + " " + data("sq_lambda_obstructed.json"));
    CHECK(blocked.status == 1);
    CHECK(blocked.out.find("\"is_cocycle\": true") != std::string::npos);
}

TEST_CASE("extensions") {
    std::string alg = data("dual_even.json");
    std::string h = write_tmp("cli_h.json", R"({"arity":2,"parity":0,"entries":[{"idx":[1,1],"out":0,"val":"1"}]})");
    std::string z = write_tmp("cli_z.json", R"({"arity":2,"parity":0,"entries":[]})");
    Result e = run("extension build " + alg + " self " + h);
    REQUIRE(e.status == 0);
    std::string built = write_tmp("cli_e.json", e.out);
    CHECK(run("validate " + built).status == 0);
    CHECK(run("extension equiv " + alg + " self " + h + " " + z).status == 1);
    CHECK(run("extension equiv " + alg + " self " + h + " " + h).status == 0);
    CHECK(run("extension equiv " + alg + " self " + h).status == 2);
}

TEST_CASE("make and format are stable") {
    for (const char* name : {"ground", "dual_odd", "clifford1", "matrix(1|1)", "square_zero(dual_odd)"}) {
        Result m = run(std::string("make '") + name + "'");
        REQUIRE(m.status == 0);
        std::string file = write_tmp("cli_made.json", m.out);
        Result f = run("format algebra " + file);
        CHECK(f.status == 0);
        CHECK(f.out == m.out);
    }
    Result mod = run("format module " + data("dual_even.json") + " " + data("dual_even_self.json"));
    CHECK(mod.status == 0);
    CHECK(mod.out == slurp(kData + "/dual_even_self.json"));
    Result file = run("cohomology " + data("dual_even.json") + " --module " + data("dual_even_self.json") +
                      " --max-arity 2 --json");
    REQUIRE(file.status == 0);
    CHECK(file.out.find("\"dim_H\": 1") != std::string::npos);
    CHECK(run("validate " + data("dual_even.json") + " --module " + data("dual_even_self.json")).status == 0);
    CHECK(run("make nothing").status == 2);
    CHECK(slurp(kData + "/lambda_eps.json") == run("make dual_odd").out);
}
