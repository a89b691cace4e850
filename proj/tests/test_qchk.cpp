#include "qecstab/codes.hpp"
#include "qecstab/qchk.hpp"

#include <doctest.h>

#include <sstream>

using namespace qecstab;

TEST_CASE("write: exact layout for the Steane code") {
    std::ostringstream out;
    write_qchk(out, codes::steane().check());
    const std::string text = out.str();
    CHECK(text.substr(0, text.find('\n')) == "QCHK v1 n=7 r=6");
    // 6 rows of 14 chars + newline each, after the header
    std::istringstream in(text);
    std::string line;
    std::getline(in, line);
    int rows = 0;
    while (std::getline(in, line)) {
        CHECK(line.size() == 14);
        ++rows;
    }
    CHECK(rows == 6);
}

TEST_CASE("round trip preserves the check matrix") {
    for (const auto& code : {codes::steane(), codes::shor(), codes::toric(2)}) {
        std::ostringstream out;
        write_qchk(out, code.check());
        std::istringstream in(out.str());
        const CheckMatrix back = read_qchk(in);
        CHECK(back.hx == code.check().hx);
        CHECK(back.hz == code.check().hz);
    }
}

TEST_CASE("reader rejects malformed input") {
    auto reject = [](const std::string& text) {
        std::istringstream in(text);
        CHECK_THROWS_AS(read_qchk(in), ValidationError);
    };
    reject("");                                     // no header
    reject("QCHK v2 n=1 r=1\n11\n");                // wrong version
    reject("QCHk v1 n=1 r=1\n11\n");                // wrong magic
    reject("QCHK v1 n=1 r=1 x=2\n11\n");            // extra header field
    reject("QCHK v1 n=1 r=1\n1\n");                 // short row
    reject("QCHK v1 n=1 r=1\n111\n");               // long row
    reject("QCHK v1 n=1 r=2\n11\n");                // missing row
    reject("QCHK v1 n=1 r=1\n12\n");                // bad character
    reject("QCHK v1 n=1 r=1\n11\njunk\n");          // trailing content
    reject("QCHK v1 n=0 r=0\n");                    // n must be positive
    reject("QCHK v1 n=x r=1\n11\n");                // bad field value
}

TEST_CASE("reader accepts exactly the writer's output with a final newline") {
    std::istringstream in("QCHK v1 n=2 r=1\n1100\n");
    const CheckMatrix c = read_qchk(in);
    CHECK(c.n == 2);
    CHECK(c.r == 1);
    CHECK(c.hx.get(0, 0));
    CHECK(c.hx.get(0, 1));
    CHECK_FALSE(c.hz.get(0, 0));
}
