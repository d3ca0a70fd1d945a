#pragma once

#include <string_view>

namespace misinfo::data {

inline constexpr std::string_view kLemmaExceptions[] = {
    "abused\tabuse", "abusing\tabuse", "aging\tage", "agreed\tagree", "always\talways",
    "analyses\tanalysis", "anything\tanything", "appendices\tappendix", "arranged\tarrange",
    "arranging\tarrange", "ate\teat", "bacteria\tbacteria", "became\tbecome", "began\tbegin",
    "begun\tbegin", "belonged\tbelong", "belonging\tbelong", "bent\tbend", "bitten\tbite",
    "bled\tbleed", "blew\tblow", "blown\tblow", "bonuses\tbonus", "bought\tbuy", "bred\tbreed",
    "broke\tbreak", "broken\tbreak", "brought\tbring", "building\tbuilding", "built\tbuild",
    "buses\tbus", "calories\tcalorie", "calves\tcalf", "came\tcome", "caught\tcatch",
    "caused\tcause", "causing\tcause", "ceiling\tceiling", "censuses\tcensus",
    "challenged\tchallenge", "challenging\tchallenge", "changed\tchange", "changing\tchange",
    "children\tchild", "chose\tchoose", "chosen\tchoose", "controlled\tcontrol",
    "controlling\tcontrol", "cookies\tcookie", "coronaviruses\tcoronavirus", "created\tcreate",
    "creating\tcreate", "crept\tcreep", "crises\tcrisis", "criteria\tcriterion", "data\tdata",
    "dealt\tdeal", "diagnoses\tdiagnosis", "dice\tdice", "died\tdie", "done\tdo", "drawn\tdraw",
    "drew\tdraw", "driven\tdrive", "drove\tdrive", "dug\tdig", "dying\tdie", "eaten\teat",
    "elves\telf", "evening\tevening", "everything\teverything", "exchanged\texchange",
    "exchanging\texchange", "fallen\tfall", "fed\tfeed", "feeling\tfeeling", "feet\tfoot",
    "fell\tfall", "felt\tfeel", "fled\tflee", "flew\tfly", "flown\tfly", "focused\tfocus",
    "focuses\tfocus", "focusing\tfocus", "forgot\tforget", "forgotten\tforget", "fought\tfight",
    "found\tfind", "froze\tfreeze", "frozen\tfreeze", "gases\tgas", "gave\tgive", "geese\tgoose",
    "given\tgive", "goes\tgo", "going\tgo", "gone\tgo", "got\tget", "gotten\tget", "grew\tgrow",
    "grown\tgrow", "halves\thalf", "heard\thear", "held\thold", "heroes\thero", "hid\thide",
    "hidden\thide", "hundred\thundred", "hung\thang", "hypotheses\thypothesis", "indeed\tindeed",
    "indices\tindex", "kept\tkeep", "knelt\tkneel", "knew\tknow", "knives\tknife", "known\tknow",
    "laid\tlay", "leaves\tleaf", "led\tlead", "left\tleave", "lens\tlens", "lent\tlend",
    "lied\tlie", "lightning\tlightning", "lit\tlight", "lives\tlife", "loaves\tloaf", "lost\tlose",
    "lying\tlie", "made\tmake", "matrices\tmatrix", "meaning\tmeaning", "meant\tmean",
    "media\tmedia", "meeting\tmeeting", "men\tman", "met\tmeet", "mice\tmouse", "morning\tmorning",
    "movies\tmovie", "naked\tnaked", "news\tnews", "nothing\tnothing", "offspring\toffspring",
    "oxen\tox", "paid\tpay", "paused\tpause", "pausing\tpause", "perhaps\tperhaps",
    "phenomena\tphenomenon", "pudding\tpudding", "ran\trun", "rang\tring", "repaired\trepair",
    "repairing\trepair", "ridden\tride", "risen\trise", "rode\tride", "rose\trise",
    "rugged\trugged", "rung\tring", "sacred\tsacred", "said\tsay", "sang\tsing", "sat\tsit",
    "saw\tsee", "scarves\tscarf", "seen\tsee", "selfies\tselfie", "selves\tself", "sent\tsend",
    "series\tseries", "shaken\tshake", "shelves\tshelf", "shoes\tshoe", "shook\tshake",
    "shot\tshoot", "showed\tshow", "shown\tshow", "slept\tsleep", "sold\tsell",
    "something\tsomething", "sought\tseek", "species\tspecies", "sped\tspeed", "spent\tspend",
    "spoke\tspeak", "spoken\tspeak", "spun\tspin", "statuses\tstatus", "stole\tsteal",
    "stolen\tsteal", "stood\tstand", "struck\tstrike", "stuck\tstick", "stung\tsting", "sung\tsing",
    "swam\tswim", "swept\tsweep", "swore\tswear", "sworn\tswear", "taken\ttake", "taught\tteach",
    "teeth\ttooth", "theses\tthesis", "thieves\tthief", "thought\tthink", "threw\tthrow",
    "thrown\tthrow", "tied\ttie", "told\ttell", "took\ttake", "tore\ttear", "torn\ttear",
    "tying\ttie", "understood\tunderstand", "using\tuse", "vertices\tvertex", "viruses\tvirus",
    "warning\twarning", "went\tgo", "wept\tweep", "wicked\twicked", "wives\twife", "woke\twake",
    "woken\twake", "wolves\twolf", "women\twoman", "wore\twear", "worn\twear", "written\twrite",
    "wrote\twrite", "zeroes\tzero", "zombies\tzombie",
};

}  // namespace misinfo::data
