#pragma once

// Frozen preprocessing fixtures: 25 tweets with expected classifier tokens and
// expected engagement-model text (nullptr when the <= 3 word rule drops it).
// Derived by hand from the documented rules; treat mismatches as bugs, not as
// an invitation to regenerate the table.

#include <string>
#include <vector>

namespace prep_golden {

struct Row {
  const char* input;
  std::vector<std::string> classifier;
  const char* virality;  // nullptr = dropped
};

inline const std::vector<Row>& rows() {
  static const std::vector<Row> table = {
      {"Masks STOP the virus! http://t.co/abc @cdc",
       {"mask", "stop", "virus"},
       "masks stop the virus ! cdc"},
      {"", {}, nullptr},
      {"\xF0\x9F\x98\xB7\xF0\x9F\x98\xB7\xF0\x9F\x98\xB7", {}, nullptr},
      {"so true", {"true"}, nullptr},
      {"Vaccines work,people!",
       {"vaccine", "work", "people"},
       "vaccines work , people !"},
      {"Breaking news https://example.com/covid spreads FAST https://",
       {"break", "news", "spread", "fast", "http"},
       "breaking news spreads fast https :"},
      {"RT @Dr_Fauci2: check t.co/xyz123 now",
       {"rt", "check"},
       "rt dr fauci2 : check now"},
      {"Studies died, ties lied; babies cried",
       {"study", "die", "tie", "lie", "baby", "cry"},
       "studies died , ties lied ; babies cried"},
      {"Viruses in glasses boxes churches wishes heroes buses focus analysis",
       {"virus", "glass", "box", "church", "wish", "hero", "bus", "focus",
        "analysis"},
       "viruses in glasses boxes churches wishes heroes buses focus analysis"},
      {"She goes; he does; tomatoes and potatoes",
       {"go", "tomato", "potato"},
       "she goes ; he does ; tomatoes and potatoes"},
      {"Running, hoping, going, making, testing, dying, being",
       {"run", "hope", "go", "make", "test", "die"},
       "running , hoping , going , making , testing , dying , being"},
      {"Stopped masked vaccinated needed agreed used red",
       {"stop", "mask", "vaccinate", "need", "agree", "use", "red"},
       "stopped masked vaccinated needed agreed used red"},
      {"Ups and downs of 5G masks2020 cans",
       {"ups", "downs", "5g", "masks2020", "cans"},
       "ups and downs of 5g masks2020 cans"},
      {"Don't trust the gov't, it's a hoax!",
       {"trust", "gov", "hoax"},
       "don't trust the gov't , it's a hoax !"},
      {"#COVID19 is a #hoax say 9 experts",
       {"covid19", "hoax", "say", "9", "expert"},
       "#covid19 is a #hoax say 9 experts"},
      {"SEE HTTPS://BIT.LY/3aB and www.fake.news NOW",
       {"see", "www", "fake", "news"},
       "see and www . fake . news now"},
      {"email me @ info@health.org today",
       {"email", "info", "org", "today"},
       "email me info health . org today"},
      {"WHO said: \"masks (N95) work\"",
       {"say", "mask", "n95", "work"},
       "who said : \" masks ( n95 ) work \""},
      {"Caf\xC3\xA9 outbreak in S\xC3\xA3o Paulo n\xC3\xA9"
       "e Wuhan",
       {"caf", "outbreak", "paulo", "ne", "wuhan"},
       "caf outbreak in so paulo ne wuhan"},
      {"wash\tyour hands\n\nstay  safe",
       {"wash", "hand", "stay", "safe"},
       "wash your hands stay safe"},
      {"five gee causes covid",
       {"five", "gee", "cause", "covid"},
       "five gee causes covid"},
      {"craziest conspiracy theory",
       {"craziest", "conspiracy", "theory"},
       nullptr},
      {"king sing bring flying trying",
       {"king", "sing", "bring", "flying", "trying"},
       "king sing bring flying trying"},
      {"Survived reduced compared cured changing settling arguing",
       {"survive", "reduce", "compare", "cure", "change", "settle", "argue"},
       "survived reduced compared cured changing settling arguing"},
      {"  Spacing   test t.co/ alone https://ok.io/x 100% legit!  ",
       {"space", "test", "co", "alone", "100", "legit"},
       "spacing test t . co alone 100 legit !"},
  };
  return table;
}

}  // namespace prep_golden
