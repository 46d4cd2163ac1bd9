#include <iostream>

#include "CLI11.hpp"
#include "hallkit/ball.hpp"
#include "hallkit/group.hpp"
#include "hallkit/version.hpp"

int main(int argc, char** argv) {
  CLI::App app{"exact arithmetic and separability toolkit"};
  app.set_version_flag("--version", hallkit::kLibraryVersion);
  app.require_subcommand(1);

  std::string word_text;
  std::string group_name = "free";
  auto* reduce = app.add_subcommand("reduce", "normal form of a word");
  reduce->add_option("word", word_text, "word text")->required();
  reduce->add_option("--group", group_name, "free|trivial");

  CLI11_PARSE(app, argc, argv);

  try {
    if (reduce->parsed()) {
      auto spec = group_name == "trivial" ? hallkit::make_trivial_center()
                                          : hallkit::make_free_center();
      auto g = hallkit::evaluate(hallkit::parse_word(word_text), spec);
      std::cout << hallkit::render(g) << "\n";
      return 0;
    }
  } catch (const hallkit::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const hallkit::DomainError& e) {
    std::cerr << "domain error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
