// SPDX-License-Identifier: Apache-2.0
#include <gtest/gtest.h>

#include <sys/socket.h>
#include <netinet/in.h>
#include <unistd.h>

#include <sstream>

#include <nlohmann/json.hpp>

#include "cli.hpp"
#include "docanno/store.hpp"
#include "support/coco_check.hpp"
#include "support/support.hpp"

using namespace docanno;
using namespace docanno::testing;
namespace fs = std::filesystem;

namespace {

struct Outcome {
    int code;
    std::string out, err;
};

class Cli : public ::testing::Test {
protected:
    Outcome run(std::vector<std::string> args) {
        args.insert(args.begin(), {"--project", dir.path().string()});
        std::ostringstream out, err;
        const int code = cli::run(args, out, err);
        return {code, out.str(), err.str()};
    }
    std::string write_pdf(const std::string& name, const std::string& words) {
        const fs::path p = files / name;
        spit(p, write_synthetic_pdf({words_page({words})}));
        return p.string();
    }

    TempDir dir;
    TempDir files;
};

std::vector<std::string> lines(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream in(s);
    for (std::string l; std::getline(in, l);) out.push_back(l);
    return out;
}

}  // namespace

TEST_F(Cli, PreprocessPrintsHashes) {
    const auto a = write_pdf("a.pdf", "first"), b = write_pdf("b.pdf", "second"), c = write_pdf("c.pdf", "third");
    const Outcome r = run({"preprocess", a, b, c});
    EXPECT_EQ(r.code, 0) << r.err;
    const auto out = lines(r.out);
    ASSERT_EQ(out.size(), 3u);
    EXPECT_EQ(out[0], sha256_hex(slurp(a)) + "  " + a);
    const Outcome again = run({"add", a, b, c});
    EXPECT_EQ(again.code, 0);
    EXPECT_EQ(again.out, r.out);
    EXPECT_EQ(ProjectStore(dir.path()).documents().size(), 3u);
}

TEST_F(Cli, PreprocessContinuesPastCorruptFile) {
    const auto a = write_pdf("a.pdf", "first"), b = write_pdf("b.pdf", "second");
    spit(files / "bad.pdf", "%PDF-1.4\ngarbage");
    const Outcome r = run({"preprocess", a, (files / "bad.pdf").string(), b});
    EXPECT_EQ(r.code, 1);
    EXPECT_EQ(lines(r.out).size(), 2u);
    const auto err = lines(r.err);
    ASSERT_EQ(err.size(), 1u);
    EXPECT_NE(err[0].find("bad.pdf"), std::string::npos);
    EXPECT_EQ(run({"preprocess", (files / "missing.pdf").string()}).code, 1);
}

TEST_F(Cli, PreprocessWithExternalProcessor) {
    const auto a = write_pdf("a.pdf", "first");
    const std::string layout = R"([{"page":{"index":0,"width":612,"height":792},)"
                               R"("tokens":[{"text":"ext","x":1,"y":2,"width":3,"height":4}]}])";
    spit(files / "layout.json", layout);
    const Outcome r = run({"preprocess", a, "--processor", "test -f {input} && cp " + (files / "layout.json").string() + " {output}"});
    ASSERT_EQ(r.code, 0) << r.err;
    ProjectStore store(dir.path());
    EXPECT_EQ(store.layout(sha256_hex(slurp(a)))->at(0).tokens.at(0).text, "ext");
}

TEST_F(Cli, UsageErrors) {
    EXPECT_EQ(run({}).code, 2);
    EXPECT_EQ(run({"frobnicate"}).code, 2);
    EXPECT_EQ(run({"preprocess"}).code, 2);
    EXPECT_EQ(run({"export", "coco", "--scale", "-1"}).code, 2);
    EXPECT_EQ(run({"serve", "--port", "70000"}).code, 2);
    const Outcome help = run({"--help"});
    EXPECT_EQ(help.code, 0);
    EXPECT_NE(help.out.find("measure"), std::string::npos);
}

TEST_F(Cli, StatusOnEmptyProject) {
    const Outcome r = run({"status"});
    EXPECT_EQ(r.code, 0);
    const auto out = lines(r.out);
    ASSERT_EQ(out.size(), 2u);
    EXPECT_EQ(out[1], "total             0      0            0");
}

TEST_F(Cli, AssignThenStatus) {
    const auto a = write_pdf("a.pdf", "first"), b = write_pdf("b.pdf", "second");
    run({"preprocess", a, b});
    const std::string ha = sha256_hex(slurp(a));
    Outcome r = run({"assign", "ann", ha});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "assigned 1 new document(s) to ann (1 total)\n");
    r = run({"assign", "bob", "--all"});
    EXPECT_EQ(r.out, "assigned 2 new document(s) to bob (2 total)\n");
    ProjectStore(dir.path()).set_status("bob", ha, {true, false, "", std::nullopt});
    r = run({"status"});
    const auto out = lines(r.out);
    ASSERT_EQ(out.size(), 4u);
    EXPECT_EQ(out[1], "ann               0      0            1");
    EXPECT_EQ(out[2], "bob               1      0            1");
    EXPECT_EQ(out[3], "total             1      0            2");
}

TEST_F(Cli, AssignUnknownHash) {
    const std::string missing(64, 'c');
    const Outcome r = run({"assign", "ann", missing});
    EXPECT_EQ(r.code, 1);
    EXPECT_NE(r.err.find(missing), std::string::npos);
}

TEST_F(Cli, Labels) {
    spit(files / "config.json", R"({"labels":[{"text":"title","color":"#ff0000"}],"relations":[{"text":"link"}]})");
    const Outcome r = run({"labels", (files / "config.json").string()});
    EXPECT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(ProjectStore(dir.path()).schema().labels.at(0).name, "title");
    spit(files / "bad.json", R"({"labels":[{"text":"x","color":"red"}]})");
    EXPECT_EQ(run({"labels", (files / "bad.json").string()}).code, 1);
}

TEST_F(Cli, MeasureDesignedFixture) {
    {
        ProjectStore store(dir.path());
        designed_agreement_project(store);
    }
    const Outcome r = run({"measure"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto out = lines(r.out);
    ASSERT_GE(out.size(), 4u);
    EXPECT_EQ(out[0], "      |          alice |            bob |        carol");
    EXPECT_EQ(out[1], "alice |            N/A | 90.00 / 100.00 | 80.00 / 0.00");
    EXPECT_EQ(out[2], "  bob | 90.00 / 100.00 |            N/A | 70.00 / 0.00");
    EXPECT_EQ(out[3], "carol |   80.00 / 0.00 |   70.00 / 0.00 |          N/A");
    const std::string csv = slurp(dir / "agreement.csv");
    EXPECT_EQ(lines(csv).at(0), "annotator_gt,annotator_pred,textual_accuracy,freeform_ap,tokens_compared,boxes_compared");
    EXPECT_EQ(lines(csv).at(1), "alice,bob,90.000000,1.000000,10,2");
    EXPECT_EQ(lines(csv).size(), 7u);

    const Outcome json_run = run({"measure", "--report", (files / "m.json").string()});
    ASSERT_EQ(json_run.code, 0);
    const auto j = nlohmann::json::parse(slurp(files / "m.json"));
    EXPECT_EQ(j["pairs"].size(), 6u);
    EXPECT_EQ(j["pairs"][1]["annotator_pred"], "carol");
    EXPECT_EQ(j["pairs"][1]["textual_accuracy"], 80.0);
    EXPECT_EQ(j["pairs"][1]["freeform_ap"], 0.0);
    EXPECT_EQ(run({"measure"}).out, r.out);
}

TEST_F(Cli, MeasureSingleAnnotatorAndNoOverlap) {
    {
        ProjectStore store(dir.path());
        store.set_schema(fixture_schema());
        const auto h1 = store.add_document(write_synthetic_pdf({words_page({"one"})}));
        const auto h2 = store.add_document(write_synthetic_pdf({words_page({"two"})}));
        store.assign("ann", {h1});
        store.save_annotations("ann", h1, {});
    }
    Outcome r = run({"measure"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(lines(r.out).size(), 3u);  // header, the single row, report path
    {
        ProjectStore store(dir.path());
        const auto h2 = store.documents()[0] == store.saved_documents("ann")[0] ? store.documents()[1]
                                                                                 : store.documents()[0];
        store.assign("bob", {h2});
        store.save_annotations("bob", h2, {});
    }
    r = run({"measure"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(lines(r.out).at(1).find("n/a"), std::string::npos);
}

TEST_F(Cli, MeasurePredictionsOnlyWhenAsked) {
    {
        ProjectStore store(dir.path());
        const auto names = designed_agreement_project(store);
        AnnotationSet predicted;
        predicted.annotations.push_back(freeform("p", 0, {100, 100, 300, 300}, "figure"));
        store.prepopulate({{store.documents()[0], annotation_set_to_json(predicted)}});
    }
    EXPECT_EQ(run({"measure"}).out.find("__predictions__"), std::string::npos);
    const Outcome r = run({"measure", "--include-predictions"});
    EXPECT_NE(r.out.find("__predictions__"), std::string::npos);
    const Outcome two = run({"measure", "--annotator", "alice", "--annotator", "bob"});
    EXPECT_EQ(lines(two.out).size(), 4u);
}

TEST_F(Cli, ExportCoco) {
    {
        ProjectStore store(dir.path());
        designed_agreement_project(store);
    }
    const fs::path out = files / "coco";
    Outcome r = run({"export", "coco", "--annotator", "alice", "--out", out.string(), "--categories", "figure"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_NE(r.err.find("no rasterizer"), std::string::npos);
    const auto coco = nlohmann::json::parse(slurp(out / "annotations.json"));
    EXPECT_TRUE(coco_problems(coco).empty());
    EXPECT_EQ(coco["annotations"].size(), 1u);
    EXPECT_EQ(coco["categories"].size(), 1u);
    EXPECT_EQ(nlohmann::json::parse(slurp(out / "manifest.json")).size(), 1u);
    const std::string first = slurp(out / "annotations.json");
    run({"export", "coco", "--annotator", "alice", "--out", out.string(), "--categories", "figure"});
    EXPECT_EQ(slurp(out / "annotations.json"), first);

    r = run({"export", "coco", "--out", out.string(), "--rasterizer", "printf x > {output}"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(std::distance(fs::directory_iterator(out / "images"), fs::directory_iterator{}), 1);
    EXPECT_EQ(run({"export", "coco", "--annotator", "ghost", "--out", out.string()}).code, 1);
}

TEST_F(Cli, ExportTokens) {
    {
        ProjectStore store(dir.path());
        designed_agreement_project(store);
    }
    Outcome r = run({"export", "tokens", "--annotator", "bob"});
    ASSERT_EQ(r.code, 0);
    const auto out = lines(r.out);
    ASSERT_EQ(out.size(), 11u);
    EXPECT_EQ(out[0], "document,page,token,text,label,annotation_id,annotator");
    EXPECT_NE(out[1].find(",0,0,one,author,t0,bob"), std::string::npos);
    r = run({"export", "tokens", "--delimiter", "\t", "--out", (files / "t.tsv").string()});
    ASSERT_EQ(r.code, 0);
    EXPECT_EQ(lines(slurp(files / "t.tsv")).size(), 31u);
    EXPECT_EQ(run({"export", "tokens", "--delimiter", "ab"}).code, 2);
    EXPECT_EQ(run({"export", "tokens", "--annotator", "ghost"}).code, 1);
}

TEST_F(Cli, Prepopulate) {
    std::string h1, h2;
    {
        ProjectStore store(dir.path());
        store.set_schema(fixture_schema());
        h1 = store.add_document(write_synthetic_pdf({words_page({"one"})}));
        h2 = store.add_document(write_synthetic_pdf({words_page({"two"})}));
    }
    AnnotationSet predicted;
    predicted.annotations.push_back(freeform("p", 0, {10, 10, 50, 50}, "table"));
    const nlohmann::json payload{{h1, annotation_set_to_json(predicted)}, {h2, annotation_set_to_json(predicted)}};
    spit(files / "pred.json", payload.dump(2));
    Outcome r = run({"prepopulate", (files / "pred.json").string()});
    EXPECT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(r.out, "populated 2 documents\n");

    spit(files / "broken.json", "{\n  \"a\": [1, 2,\n  }\n");
    r = run({"prepopulate", (files / "broken.json").string()});
    EXPECT_EQ(r.code, 1);
    EXPECT_NE(r.err.find("broken.json:3:3"), std::string::npos) << r.err;

    predicted.annotations[0].label = "nope";
    spit(files / "partial.json",
         nlohmann::json{{h1, annotation_set_to_json(predicted)}, {h2, payload[h2]}}.dump());
    r = run({"prepopulate", (files / "partial.json").string()});
    EXPECT_EQ(r.code, 1);
    EXPECT_EQ(r.out, "populated 1 document\n");
    EXPECT_NE(r.err.find(h1), std::string::npos);
}

TEST_F(Cli, ServeOnOccupiedPort) {
    const int sock = ::socket(AF_INET, SOCK_STREAM, 0);
    ASSERT_GE(sock, 0);
    sockaddr_in addr{};
    addr.sin_family = AF_INET;
    addr.sin_addr.s_addr = htonl(INADDR_LOOPBACK);
    addr.sin_port = 0;
    ASSERT_EQ(::bind(sock, reinterpret_cast<sockaddr*>(&addr), sizeof addr), 0);
    ASSERT_EQ(::listen(sock, 1), 0);
    socklen_t len = sizeof addr;
    ::getsockname(sock, reinterpret_cast<sockaddr*>(&addr), &len);
    const int port = ntohs(addr.sin_port);
    const Outcome r = run({"serve", "--port", std::to_string(port)});
    ::close(sock);
    EXPECT_EQ(r.code, 1);
    EXPECT_NE(r.err.find("in use"), std::string::npos) << r.err;
}

TEST_F(Cli, ProjectFromEnvironment) {
    ::setenv("PAWLS_ROOT", dir.path().string().c_str(), 1);
    const auto a = write_pdf("a.pdf", "env");
    std::ostringstream out, err;
    EXPECT_EQ(cli::run({"preprocess", a}, out, err), 0);
    ::unsetenv("PAWLS_ROOT");
    EXPECT_EQ(ProjectStore(dir.path()).documents().size(), 1u);
}
