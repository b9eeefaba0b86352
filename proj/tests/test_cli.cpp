#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <string>
#include <sys/wait.h>

namespace {

int run(const std::string& args, std::string* stdout_text = nullptr) {
    std::string cmd = std::string(RIEMCURV_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[4096];
    size_t n;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
    int status = pclose(pipe);
    if (stdout_text) *stdout_text = out;
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

}  // namespace

TEST_CASE("successful commands exit 0") {
    CHECK(run("expand lk --k 1 --order 6") == 0);
    CHECK(run("expand basis --k 4 --p 2 --format csv") == 0);
    CHECK(run("act t --on C:0,0 --order 5") == 0);
    CHECK(run("act t-power 2 --on 3/4*C:2,1") == 0);
    CHECK(run("act t-lambda --on D:2,1 --lambda 2 --order 5") == 0);
    CHECK(run("oracle-mu --n 2 --R 1/2") == 0);
    CHECK(run("tables hermitian --k 3") == 0);
    CHECK(run("verify --suite lk-recursion --order 6") == 0);
}

TEST_CASE("usage and input errors exit 2") {
    CHECK(run("expand basis --k 3 --p 2") == 2);      // 2p > k
    CHECK(run("expand lk") == 2);                     // missing --k
    CHECK(run("expand wat --k 1") == 2);              // unknown kind
    CHECK(run("act t --on Q:1,0") == 2);              // unknown basis
    CHECK(run("act t --on TD:1,0") == 2);             // wrong basis for action
    CHECK(run("act t --on C:1") == 2);                // missing index
    CHECK(run("oracle-mu --n 2 --R 0") == 2);         // nonpositive radius
    CHECK(run("nonsense") == 2);                      // unknown subcommand
}

TEST_CASE("domain errors exit 3") {
    CHECK(run("expand lk --k 2 --basis tilde-delta --lambda 0") == 3);
    CHECK(run("act t-lambda --on TD:2,1 --lambda 0") == 3);
    CHECK(run("verify --suite hermitian-basis --lambda 0") == 3);
}

TEST_CASE("the order environment variable sets the default") {
    std::string deep, shallow;
    run("expand lk --k 0 --format json", &deep);  // default order 12
    int code = run("expand lk --k 0 --format json --order 4", &shallow);
    CHECK(code == 0);
    CHECK(deep != shallow);

    std::string cmd = std::string("RIEMCURV_ORDER=4 ") + RIEMCURV_CLI_PATH +
                      " expand lk --k 0 --format json";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[4096];
    size_t n;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
    pclose(pipe);
    CHECK(out == shallow);
}
