#pragma once

#include <string_view>

namespace misinfo::data {

inline constexpr std::string_view kPosLexicon[] = {
    "abandon\tVERB", "abandoned\tVERB", "abandoning\tVERB", "abandons\tVERB", "able\tADJ",
    "ably\tADV", "abnormal\tADJ", "abnormally\tADV", "about\tADV", "abroad\tADV", "abrupt\tADJ",
    "abruptly\tADV", "absent\tADJ", "absently\tADV", "absorb\tVERB", "absorbed\tVERB",
    "absorbing\tVERB", "absorbs\tVERB", "accelerate\tVERB", "accelerated\tVERB",
    "accelerates\tVERB", "accelerating\tVERB", "acceleration\tNOUN", "accelerations\tNOUN",
    "accept\tVERB", "accepted\tVERB", "accepting\tVERB", "accepts\tVERB", "access\tVERB",
    "accessed\tVERB", "accesses\tVERB", "accessing\tVERB", "accident\tNOUN", "accidents\tNOUN",
    "account\tNOUN", "accounts\tNOUN", "accuracies\tNOUN", "accuracy\tNOUN", "accurate\tADJ",
    "accurately\tADV", "accusation\tNOUN", "accusations\tNOUN", "acid\tNOUN", "acids\tNOUN",
    "acknowledge\tVERB", "acknowledged\tVERB", "acknowledges\tVERB", "acknowledging\tVERB",
    "act\tVERB", "acted\tVERB", "acting\tVERB", "action\tNOUN", "actions\tNOUN", "active\tADJ",
    "actively\tADV", "activities\tNOUN", "activity\tNOUN", "acts\tVERB", "actual\tADJ",
    "actually\tADV", "acute\tADJ", "acutely\tADV", "adapt\tVERB", "adapted\tVERB", "adapting\tVERB",
    "adapts\tVERB", "add\tVERB", "added\tVERB", "adding\tVERB", "address\tVERB", "addressed\tVERB",
    "addresses\tVERB", "addressing\tVERB", "adds\tVERB", "adjust\tVERB", "adjusted\tVERB",
    "adjusting\tVERB", "adjusts\tVERB", "admire\tVERB", "admired\tVERB", "admires\tVERB",
    "admiring\tVERB", "admit\tVERB", "admits\tVERB", "admitted\tVERB", "admitting\tVERB",
    "advantageous\tADJ", "advantageously\tADV", "advertise\tVERB", "advertised\tVERB",
    "advertises\tVERB", "advertising\tVERB", "advise\tVERB", "advised\tVERB", "advises\tVERB",
    "advising\tVERB", "affect\tVERB", "affected\tVERB", "affecting\tVERB", "affects\tVERB",
    "afford\tVERB", "affordable\tADJ", "affordably\tADV", "afforded\tVERB", "affording\tVERB",
    "affords\tVERB", "afraid\tADJ", "afraidly\tADV", "age\tNOUN", "agencies\tNOUN", "agency\tNOUN",
    "ages\tNOUN", "agree\tVERB", "agreed\tVERB", "agreeing\tVERB", "agrees\tVERB", "ahead\tADV",
    "air\tNOUN", "airport\tNOUN", "airports\tNOUN", "airs\tNOUN", "alert\tADJ", "alertly\tADV",
    "algorithm\tNOUN", "algorithms\tNOUN", "allegation\tNOUN", "allegations\tNOUN",
    "allergies\tNOUN", "allergy\tNOUN", "allow\tVERB", "allowed\tVERB", "allowing\tVERB",
    "allows\tVERB", "almost\tADV", "already\tADV", "also\tADV", "always\tADV", "ambulance\tNOUN",
    "ambulances\tNOUN", "american\tNOUN", "americans\tNOUN", "amount\tNOUN", "amounts\tNOUN",
    "analyze\tVERB", "analyzed\tVERB", "analyzes\tVERB", "analyzing\tVERB", "anchor\tNOUN",
    "anchors\tNOUN", "angle\tNOUN", "angles\tNOUN", "angry\tADJ", "animal\tNOUN", "animals\tNOUN",
    "ankle\tNOUN", "ankles\tNOUN", "announce\tVERB", "announced\tVERB", "announcement\tNOUN",
    "announcements\tNOUN", "announces\tVERB", "announcing\tVERB", "ant\tNOUN", "antenna\tNOUN",
    "antennas\tNOUN", "antibodies\tNOUN", "antibody\tNOUN", "antigen\tNOUN", "antigens\tNOUN",
    "ants\tNOUN", "anxieties\tNOUN", "anxiety\tNOUN", "anxious\tADJ", "anxiously\tADV",
    "anybody\tPRON", "anyone\tPRON", "anything\tPRON", "anywhere\tADV", "apart\tADV",
    "apathetic\tADJ", "apologies\tNOUN", "apologize\tVERB", "apologized\tVERB", "apologizes\tVERB",
    "apologizing\tVERB", "apology\tNOUN", "appear\tVERB", "appeared\tVERB", "appearing\tVERB",
    "appears\tVERB", "appetite\tNOUN", "appetites\tNOUN", "apple\tNOUN", "apples\tNOUN",
    "applied\tVERB", "applies\tVERB", "apply\tVERB", "applying\tVERB", "appoint\tVERB",
    "appointed\tVERB", "appointing\tVERB", "appoints\tVERB", "appreciate\tVERB",
    "appreciated\tVERB", "appreciates\tVERB", "appreciating\tVERB", "approval\tNOUN",
    "approvals\tNOUN", "approve\tVERB", "approved\tVERB", "approves\tVERB", "approving\tVERB",
    "area\tNOUN", "areas\tNOUN", "arena\tNOUN", "arenas\tNOUN", "argue\tVERB", "argued\tVERB",
    "argues\tVERB", "arguing\tVERB", "argument\tNOUN", "arguments\tNOUN", "arid\tADJ",
    "aridly\tADV", "arm\tNOUN", "armor\tNOUN", "armors\tNOUN", "arms\tNOUN", "aroma\tNOUN",
    "aromas\tNOUN", "around\tADV", "arrange\tVERB", "arranged\tVERB", "arranges\tVERB",
    "arranging\tVERB", "arrive\tVERB", "arrived\tVERB", "arrives\tVERB", "arriving\tVERB",
    "arrogant\tADJ", "arrogantly\tADV", "arrow\tNOUN", "arrows\tNOUN", "art\tNOUN",
    "arteries\tNOUN", "artery\tNOUN", "article\tNOUN", "articles\tNOUN", "arts\tNOUN", "ash\tNOUN",
    "ashamed\tADJ", "ashes\tNOUN", "aside\tADV", "ask\tVERB", "asked\tVERB", "asking\tVERB",
    "asks\tVERB", "asleep\tADJ", "asleeply\tADV", "assemble\tVERB", "assembled\tVERB",
    "assembles\tVERB", "assembling\tVERB", "assert\tVERB", "asserted\tVERB", "asserting\tVERB",
    "assertion\tNOUN", "assertions\tNOUN", "asserts\tVERB", "assess\tVERB", "assessed\tVERB",
    "assesses\tVERB", "assessing\tVERB", "asset\tNOUN", "assets\tNOUN", "assign\tVERB",
    "assigned\tVERB", "assigning\tVERB", "assigns\tVERB", "associate\tVERB", "associated\tVERB",
    "associates\tVERB", "associating\tVERB", "assume\tVERB", "assumed\tVERB", "assumes\tVERB",
    "assuming\tVERB", "asthma\tNOUN", "asthmas\tNOUN", "asymptomatic\tADJ", "atom\tNOUN",
    "atoms\tNOUN", "attach\tVERB", "attached\tVERB", "attaches\tVERB", "attaching\tVERB",
    "attempt\tVERB", "attempted\tVERB", "attempting\tVERB", "attempts\tVERB", "attic\tNOUN",
    "attics\tNOUN", "attitude\tNOUN", "attitudes\tNOUN", "atypical\tADJ", "atypically\tADV",
    "audience\tNOUN", "audiences\tNOUN", "authentic\tADJ", "authorities\tNOUN", "authority\tNOUN",
    "authorization\tNOUN", "authorizations\tNOUN", "automate\tVERB", "automated\tVERB",
    "automates\tVERB", "automating\tVERB", "autumn\tNOUN", "autumns\tNOUN", "available\tADJ",
    "availably\tADV", "avatar\tNOUN", "avatars\tNOUN", "average\tNOUN", "averagely\tADV",
    "averages\tNOUN", "awake\tADJ", "awakely\tADV", "award\tNOUN", "awards\tNOUN", "aware\tADJ",
    "awarely\tADV", "away\tADV", "axe\tNOUN", "axes\tNOUN", "axiom\tNOUN", "axioms\tNOUN",
    "back\tNOUN", "backpack\tNOUN", "backpacks\tNOUN", "backs\tNOUN", "backward\tADV",
    "bacteria\tNOUN", "bacterias\tNOUN", "bad\tADJ", "badly\tADV", "bake\tVERB", "baked\tVERB",
    "bakes\tVERB", "baking\tVERB", "balanced\tADJ", "balconies\tNOUN", "balcony\tNOUN",
    "ball\tNOUN", "ballot\tNOUN", "ballots\tNOUN", "balls\tNOUN", "ban\tVERB", "banana\tNOUN",
    "bananas\tNOUN", "bandage\tNOUN", "bandages\tNOUN", "bank\tNOUN", "banks\tNOUN", "banned\tVERB",
    "banning\tVERB", "bans\tVERB", "barely\tADV", "barley\tNOUN", "barleys\tNOUN", "barn\tNOUN",
    "barns\tNOUN", "base\tNOUN", "basement\tNOUN", "basements\tNOUN", "bases\tNOUN",
    "basically\tADV", "bat\tNOUN", "batch\tNOUN", "batches\tNOUN", "bats\tNOUN", "batteries\tNOUN",
    "battery\tNOUN", "battle\tVERB", "battled\tVERB", "battles\tVERB", "battling\tVERB", "be\tVERB",
    "beach\tNOUN", "beaches\tNOUN", "bean\tNOUN", "beans\tNOUN", "bear\tNOUN", "bears\tNOUN",
    "become\tVERB", "becomed\tVERB", "becomes\tVERB", "becoming\tVERB", "bed\tVERB", "beds\tNOUN",
    "bee\tNOUN", "bees\tNOUN", "beetle\tNOUN", "beetles\tNOUN", "begin\tVERB", "beginned\tVERB",
    "beginning\tVERB", "begins\tVERB", "behind\tADV", "belief\tNOUN", "beliefs\tNOUN",
    "believe\tVERB", "believed\tVERB", "believes\tVERB", "believing\tVERB", "bench\tNOUN",
    "benches\tNOUN", "benchmark\tNOUN", "benchmarks\tNOUN", "bend\tVERB", "bended\tVERB",
    "bending\tVERB", "bends\tVERB", "beneficial\tADJ", "beneficially\tADV", "beneficiaries\tNOUN",
    "beneficiary\tNOUN", "berries\tNOUN", "berry\tNOUN", "bes\tVERB", "best\tADJ", "bestly\tADV",
    "bet\tVERB", "bets\tVERB", "betted\tVERB", "better\tADJ", "betterly\tADV", "betting\tVERB",
    "beverage\tNOUN", "beverages\tNOUN", "bias\tNOUN", "biased\tADJ", "biases\tNOUN", "big\tADJ",
    "bill\tNOUN", "billion\tNUM", "bills\tNOUN", "bing\tVERB", "bio\tNOUN", "biopsies\tNOUN",
    "biopsy\tNOUN", "bios\tNOUN", "bird\tNOUN", "birds\tNOUN", "blame\tVERB", "blamed\tVERB",
    "blames\tVERB", "blaming\tVERB", "blanket\tNOUN", "blankets\tNOUN", "blend\tVERB",
    "blended\tVERB", "blending\tVERB", "blends\tVERB", "block\tVERB", "blocked\tVERB",
    "blocking\tVERB", "blocks\tVERB", "blood\tNOUN", "bloods\tNOUN", "board\tNOUN", "boards\tNOUN",
    "boat\tNOUN", "boats\tNOUN", "bodies\tNOUN", "body\tNOUN", "boil\tVERB", "boiled\tVERB",
    "boiling\tVERB", "boils\tVERB", "bolt\tNOUN", "bolts\tNOUN", "bone\tNOUN", "bones\tNOUN",
    "book\tNOUN", "books\tNOUN", "booster\tNOUN", "boosters\tNOUN", "bored\tADJ", "borrow\tVERB",
    "borrowed\tVERB", "borrowing\tVERB", "borrows\tVERB", "boundaries\tNOUN", "boundary\tNOUN",
    "bow\tNOUN", "bowl\tNOUN", "bowls\tNOUN", "bows\tNOUN", "box\tNOUN", "boxes\tNOUN", "boy\tNOUN",
    "boys\tNOUN", "brain\tNOUN", "brains\tNOUN", "breach\tVERB", "breached\tVERB", "breaches\tVERB",
    "breaching\tVERB", "bread\tNOUN", "breads\tNOUN", "break\tVERB", "breaked\tVERB",
    "breakfast\tNOUN", "breakfasts\tNOUN", "breaking\tVERB", "breaks\tVERB", "breathe\tVERB",
    "breathed\tVERB", "breathes\tVERB", "breathing\tVERB", "briefing\tNOUN", "briefings\tNOUN",
    "bright\tADJ", "brightly\tADV", "brilliant\tADJ", "brilliantly\tADV", "bring\tVERB",
    "bringed\tVERB", "bringing\tVERB", "brings\tVERB", "broad\tADJ", "broadcast\tNOUN",
    "broadcasts\tNOUN", "broaden\tVERB", "broadened\tVERB", "broadening\tVERB", "broadens\tVERB",
    "broadly\tADV", "broccoli\tNOUN", "broccolis\tNOUN", "broke\tADJ", "brokely\tADV",
    "brother\tNOUN", "brothers\tNOUN", "browse\tVERB", "browsed\tVERB", "browses\tVERB",
    "browsing\tVERB", "bruise\tNOUN", "bruises\tNOUN", "brush\tNOUN", "brushes\tNOUN",
    "bucket\tNOUN", "buckets\tNOUN", "budget\tVERB", "budgeted\tVERB", "budgeting\tVERB",
    "budgets\tVERB", "build\tVERB", "builded\tVERB", "building\tVERB", "buildings\tNOUN",
    "builds\tVERB", "bulb\tNOUN", "bulbs\tNOUN", "bullet\tNOUN", "bulletin\tNOUN",
    "bulletins\tNOUN", "bullets\tNOUN", "burger\tNOUN", "burgers\tNOUN", "burn\tNOUN",
    "burns\tNOUN", "bus\tNOUN", "buses\tNOUN", "business\tNOUN", "businesses\tNOUN", "busy\tADJ",
    "butter\tNOUN", "butterflies\tNOUN", "butterfly\tNOUN", "butters\tNOUN", "button\tNOUN",
    "buttons\tNOUN", "buy\tVERB", "buyed\tVERB", "buying\tVERB", "buys\tVERB", "cabbage\tNOUN",
    "cabbages\tNOUN", "cabinet\tNOUN", "cabinets\tNOUN", "cable\tNOUN", "cables\tNOUN",
    "cake\tNOUN", "cakes\tNOUN", "calcium\tNOUN", "calciums\tNOUN", "calculate\tVERB",
    "calculated\tVERB", "calculates\tVERB", "calculating\tVERB", "calendar\tNOUN",
    "calendars\tNOUN", "call\tVERB", "called\tVERB", "calling\tVERB", "calls\tVERB", "calm\tADJ",
    "calmly\tADV", "calorie\tNOUN", "calories\tNOUN", "camel\tNOUN", "camels\tNOUN", "camera\tNOUN",
    "cameras\tNOUN", "campaign\tNOUN", "campaigns\tNOUN", "cancel\tVERB", "canceled\tVERB",
    "canceling\tVERB", "cancels\tVERB", "cancer\tNOUN", "cancers\tNOUN", "candies\tNOUN",
    "candle\tNOUN", "candles\tNOUN", "candy\tNOUN", "capsule\tNOUN", "capsules\tNOUN",
    "captain\tNOUN", "captains\tNOUN", "capture\tVERB", "captured\tVERB", "captures\tVERB",
    "capturing\tVERB", "car\tNOUN", "carbohydrate\tNOUN", "carbohydrates\tNOUN", "card\tNOUN",
    "cards\tNOUN", "care\tNOUN", "careful\tADJ", "carefully\tADV", "careless\tADJ",
    "carelessly\tADV", "cares\tNOUN", "carpet\tNOUN", "carpets\tNOUN", "carried\tVERB",
    "carries\tVERB", "carrot\tNOUN", "carrots\tNOUN", "carry\tVERB", "carrying\tVERB", "cars\tNOUN",
    "case\tNOUN", "cases\tNOUN", "cast\tNOUN", "casts\tNOUN", "catalyst\tNOUN", "catalysts\tNOUN",
    "catastrophe\tNOUN", "catastrophes\tNOUN", "catch\tVERB", "catched\tVERB", "catches\tVERB",
    "catching\tVERB", "categorize\tVERB", "categorized\tVERB", "categorizes\tVERB",
    "categorizing\tVERB", "cattle\tNOUN", "cattles\tNOUN", "causation\tNOUN", "causations\tNOUN",
    "cause\tVERB", "caused\tVERB", "causes\tVERB", "causing\tVERB", "cautious\tADJ",
    "cautiously\tADV", "ceiling\tNOUN", "ceilings\tNOUN", "celebrate\tVERB", "celebrated\tVERB",
    "celebrates\tVERB", "celebrating\tVERB", "celebrities\tNOUN", "celebrity\tNOUN", "cell\tNOUN",
    "cells\tNOUN", "censor\tVERB", "censored\tVERB", "censoring\tVERB", "censors\tVERB",
    "center\tNOUN", "centers\tNOUN", "certain\tADJ", "certainly\tADV", "chain\tNOUN",
    "chains\tNOUN", "chair\tNOUN", "chairs\tNOUN", "challenge\tVERB", "challenged\tVERB",
    "challenges\tVERB", "challenging\tVERB", "champion\tNOUN", "champions\tNOUN", "change\tVERB",
    "changed\tVERB", "changes\tVERB", "changing\tVERB", "channel\tNOUN", "channels\tNOUN",
    "charge\tVERB", "charged\tVERB", "charger\tNOUN", "chargers\tNOUN", "charges\tVERB",
    "charging\tVERB", "chart\tNOUN", "charts\tNOUN", "cheap\tADJ", "cheaply\tADV", "checkup\tNOUN",
    "checkups\tNOUN", "cheerful\tADJ", "cheerfully\tADV", "chemical\tNOUN", "chemicals\tNOUN",
    "cherries\tNOUN", "cherry\tNOUN", "chest\tNOUN", "chests\tNOUN", "child\tNOUN", "childs\tNOUN",
    "chocolate\tNOUN", "chocolates\tNOUN", "cholesterol\tNOUN", "cholesterols\tNOUN",
    "choose\tVERB", "choosed\tVERB", "chooses\tVERB", "choosing\tVERB", "chop\tVERB",
    "chopped\tVERB", "chopping\tVERB", "chops\tVERB", "chromosome\tNOUN", "chromosomes\tNOUN",
    "chronic\tADJ", "church\tNOUN", "churches\tNOUN", "cipher\tNOUN", "ciphers\tNOUN",
    "circle\tNOUN", "circles\tNOUN", "circumference\tNOUN", "circumferences\tNOUN",
    "circumstance\tNOUN", "circumstances\tNOUN", "citation\tNOUN", "citations\tNOUN", "cite\tVERB",
    "cited\tVERB", "cites\tVERB", "cities\tNOUN", "citing\tVERB", "city\tNOUN", "claim\tVERB",
    "claimed\tVERB", "claiming\tVERB", "claims\tVERB", "clarities\tNOUN", "clarity\tNOUN",
    "class\tNOUN", "classes\tNOUN", "classified\tVERB", "classifies\tVERB", "classify\tVERB",
    "classifying\tVERB", "clay\tNOUN", "clays\tNOUN", "clean\tADJ", "cleanly\tADV", "clear\tADJ",
    "clearly\tADV", "clever\tADJ", "cleverly\tADV", "click\tVERB", "clicked\tVERB",
    "clicking\tVERB", "clicks\tVERB", "climate\tNOUN", "climates\tNOUN", "clinic\tNOUN",
    "clinical\tADJ", "clinically\tADV", "clinics\tNOUN", "clock\tNOUN", "clocks\tNOUN",
    "close\tADJ", "closely\tADV", "closet\tNOUN", "closets\tNOUN", "cloud\tNOUN", "clouds\tNOUN",
    "cloudy\tADJ", "coach\tVERB", "coached\tVERB", "coaches\tVERB", "coaching\tVERB", "coal\tNOUN",
    "coals\tNOUN", "code\tVERB", "coded\tVERB", "codes\tVERB", "coding\tVERB", "coffee\tNOUN",
    "coffees\tNOUN", "cold\tNOUN", "coldly\tADV", "colds\tNOUN", "collaborate\tVERB",
    "collaborated\tVERB", "collaborates\tVERB", "collaborating\tVERB", "collapse\tVERB",
    "collapsed\tVERB", "collapses\tVERB", "collapsing\tVERB", "collect\tVERB", "collected\tVERB",
    "collecting\tVERB", "collects\tVERB", "college\tNOUN", "colleges\tNOUN", "column\tNOUN",
    "columns\tNOUN", "comb\tNOUN", "combat\tVERB", "combated\tVERB", "combating\tVERB",
    "combats\tVERB", "combs\tNOUN", "come\tVERB", "comed\tVERB", "comes\tVERB", "coming\tVERB",
    "comment\tVERB", "commentator\tNOUN", "commentators\tNOUN", "commented\tVERB",
    "commenting\tVERB", "comments\tVERB", "commerce\tNOUN", "commerces\tNOUN", "common\tADJ",
    "commonly\tADV", "communities\tNOUN", "community\tNOUN", "commute\tVERB", "commuted\tVERB",
    "commutes\tVERB", "commuting\tVERB", "companies\tNOUN", "company\tNOUN", "compare\tVERB",
    "compared\tVERB", "compares\tVERB", "comparing\tVERB", "compass\tNOUN", "compasses\tNOUN",
    "complain\tVERB", "complained\tVERB", "complaining\tVERB", "complains\tVERB", "completely\tADV",
    "compliance\tNOUN", "compliances\tNOUN", "complication\tNOUN", "complications\tNOUN",
    "complied\tVERB", "complies\tVERB", "compliment\tVERB", "complimented\tVERB",
    "complimenting\tVERB", "compliments\tVERB", "comply\tVERB", "complying\tVERB", "compose\tVERB",
    "composed\tVERB", "composes\tVERB", "composing\tVERB", "compound\tNOUN", "compounds\tNOUN",
    "compromise\tVERB", "compromised\tVERB", "compromises\tVERB", "compromising\tVERB",
    "compulsory\tADJ", "compute\tVERB", "computed\tVERB", "computer\tNOUN", "computers\tNOUN",
    "computes\tVERB", "computing\tVERB", "conceal\tVERB", "concealed\tVERB", "concealing\tVERB",
    "conceals\tVERB", "concede\tVERB", "conceded\tVERB", "concedes\tVERB", "conceding\tVERB",
    "concentrate\tVERB", "concentrated\tVERB", "concentrates\tVERB", "concentrating\tVERB",
    "concerned\tADJ", "conclude\tVERB", "concluded\tVERB", "concludes\tVERB", "concluding\tVERB",
    "conclusion\tNOUN", "conclusions\tNOUN", "condition\tNOUN", "conditions\tNOUN", "conduct\tVERB",
    "conducted\tVERB", "conducting\tVERB", "conducts\tVERB", "cone\tNOUN", "cones\tNOUN",
    "confidence\tNOUN", "confidences\tNOUN", "confident\tADJ", "confidently\tADV", "confirm\tVERB",
    "confirmed\tVERB", "confirming\tVERB", "confirms\tVERB", "confusion\tNOUN", "confusions\tNOUN",
    "congratulate\tVERB", "congratulated\tVERB", "congratulates\tVERB", "congratulating\tVERB",
    "congress\tNOUN", "congresses\tNOUN", "connect\tVERB", "connected\tVERB", "connecting\tVERB",
    "connects\tVERB", "conscious\tADJ", "consciously\tADV", "conservative\tADJ",
    "conservatively\tADV", "consider\tVERB", "considered\tVERB", "considering\tVERB",
    "considers\tVERB", "conspiracies\tNOUN", "conspiracy\tNOUN", "constant\tNOUN",
    "constantly\tADV", "constants\tNOUN", "construct\tVERB", "constructed\tVERB",
    "constructing\tVERB", "constructs\tVERB", "contagion\tNOUN", "contagions\tNOUN",
    "contagious\tADJ", "contagiously\tADV", "contaminated\tADJ", "context\tNOUN", "contexts\tNOUN",
    "continually\tADV", "continue\tVERB", "continued\tVERB", "continues\tVERB", "continuing\tVERB",
    "contrast\tVERB", "contrasted\tVERB", "contrasting\tVERB", "contrasts\tVERB",
    "contribute\tVERB", "contributed\tVERB", "contributes\tVERB", "contributing\tVERB",
    "control\tNOUN", "controls\tNOUN", "convert\tVERB", "converted\tVERB", "converting\tVERB",
    "converts\tVERB", "convince\tVERB", "convinced\tVERB", "convinces\tVERB", "convincing\tVERB",
    "cookie\tNOUN", "cookies\tNOUN", "cool\tADJ", "coolly\tADV", "cooperate\tVERB",
    "cooperated\tVERB", "cooperates\tVERB", "cooperating\tVERB", "coordinate\tVERB",
    "coordinated\tVERB", "coordinates\tVERB", "coordinating\tVERB", "cope\tVERB", "coped\tVERB",
    "copes\tVERB", "copied\tVERB", "copies\tVERB", "coping\tVERB", "copy\tVERB", "copying\tVERB",
    "corn\tNOUN", "corns\tNOUN", "corollaries\tNOUN", "corollary\tNOUN", "corona\tNOUN",
    "coronas\tNOUN", "coronavirus\tNOUN", "coronaviruses\tNOUN", "corporation\tNOUN",
    "corporations\tNOUN", "corpus\tNOUN", "corpuses\tNOUN", "correct\tADJ", "correction\tNOUN",
    "corrections\tNOUN", "correctly\tADV", "correlate\tVERB", "correlated\tVERB",
    "correlates\tVERB", "correlating\tVERB", "correlation\tNOUN", "correlations\tNOUN",
    "cortex\tNOUN", "cortexes\tNOUN", "cost\tVERB", "costed\tVERB", "costing\tVERB", "costly\tADJ",
    "costs\tVERB", "cotton\tNOUN", "cottons\tNOUN", "couch\tNOUN", "couches\tNOUN", "cough\tVERB",
    "coughed\tVERB", "coughing\tVERB", "coughs\tVERB", "count\tVERB", "counted\tVERB",
    "counting\tVERB", "countries\tNOUN", "country\tNOUN", "counts\tVERB", "couple\tNOUN",
    "couples\tNOUN", "course\tNOUN", "courses\tNOUN", "court\tNOUN", "courteous\tADJ",
    "courteously\tADV", "courts\tNOUN", "courtyard\tNOUN", "courtyards\tNOUN", "cover\tVERB",
    "coverage\tNOUN", "coverages\tNOUN", "covered\tVERB", "covering\tVERB", "covers\tVERB",
    "covid\tNOUN", "covids\tNOUN", "crab\tNOUN", "crabs\tNOUN", "crash\tVERB", "crashed\tVERB",
    "crashes\tVERB", "crashing\tVERB", "crave\tVERB", "craved\tVERB", "craves\tVERB",
    "craving\tVERB", "create\tVERB", "created\tVERB", "creates\tVERB", "creating\tVERB",
    "credible\tADJ", "credibly\tADV", "credit\tNOUN", "credits\tNOUN", "crisis\tNOUN",
    "crisises\tNOUN", "critic\tNOUN", "critical\tADJ", "critically\tADV", "criticize\tVERB",
    "criticized\tVERB", "criticizes\tVERB", "criticizing\tVERB", "critics\tNOUN", "crop\tNOUN",
    "crops\tNOUN", "crow\tNOUN", "crowded\tADJ", "crows\tNOUN", "crucial\tADJ", "crucially\tADV",
    "cruel\tADJ", "cruelly\tADV", "crutch\tNOUN", "crutches\tNOUN", "crystal\tNOUN",
    "crystals\tNOUN", "cube\tNOUN", "cubes\tNOUN", "cup\tNOUN", "cups\tNOUN", "curb\tNOUN",
    "curbs\tNOUN", "cure\tVERB", "cured\tVERB", "cures\tVERB", "curfew\tNOUN", "curfews\tNOUN",
    "curing\tVERB", "curious\tADJ", "curiously\tADV", "curtain\tNOUN", "curtains\tNOUN",
    "curve\tNOUN", "curves\tNOUN", "cut\tVERB", "cuts\tVERB", "cutted\tVERB", "cutting\tVERB",
    "cylinder\tNOUN", "cylinders\tNOUN", "cynical\tADJ", "cynically\tADV", "dagger\tNOUN",
    "daggers\tNOUN", "daily\tADV", "dance\tVERB", "danced\tVERB", "dances\tVERB", "dancing\tVERB",
    "dangerous\tADJ", "dangerously\tADV", "dare\tVERB", "dared\tVERB", "dares\tVERB",
    "daring\tVERB", "dark\tADJ", "darkly\tADV", "data\tNOUN", "database\tNOUN", "databases\tNOUN",
    "datas\tNOUN", "dataset\tNOUN", "datasets\tNOUN", "day\tNOUN", "days\tNOUN", "deadly\tADJ",
    "death\tNOUN", "deaths\tNOUN", "debate\tVERB", "debated\tVERB", "debates\tVERB",
    "debating\tVERB", "debt\tNOUN", "debts\tNOUN", "debug\tVERB", "debuged\tVERB", "debuging\tVERB",
    "debugs\tVERB", "debunk\tVERB", "debunked\tVERB", "debunking\tVERB", "debunks\tVERB",
    "deceive\tVERB", "deceived\tVERB", "deceives\tVERB", "deceiving\tVERB", "deception\tNOUN",
    "deceptions\tNOUN", "deceptive\tADJ", "deceptively\tADV", "decide\tVERB", "decided\tVERB",
    "decides\tVERB", "deciding\tVERB", "decimal\tNOUN", "decimals\tNOUN", "decision\tNOUN",
    "decisions\tNOUN", "declare\tVERB", "declared\tVERB", "declares\tVERB", "declaring\tVERB",
    "decline\tVERB", "declined\tVERB", "declines\tVERB", "declining\tVERB", "decrease\tVERB",
    "decreased\tVERB", "decreases\tVERB", "decreasing\tVERB", "decrypt\tVERB", "decrypted\tVERB",
    "decrypting\tVERB", "decrypts\tVERB", "deduce\tVERB", "deduced\tVERB", "deduces\tVERB",
    "deducing\tVERB", "deductible\tNOUN", "deductibles\tNOUN", "deep\tADJ", "deeply\tADV",
    "deer\tNOUN", "deers\tNOUN", "defeat\tVERB", "defeated\tVERB", "defeating\tVERB",
    "defeats\tVERB", "defied\tVERB", "defies\tVERB", "definitely\tADV", "defy\tVERB",
    "defying\tVERB", "delay\tVERB", "delayed\tVERB", "delaying\tVERB", "delays\tVERB",
    "delegate\tVERB", "delegated\tVERB", "delegates\tVERB", "delegating\tVERB", "delete\tVERB",
    "deleted\tVERB", "deletes\tVERB", "deleting\tVERB", "delighted\tADJ", "deliver\tVERB",
    "delivered\tVERB", "delivering\tVERB", "delivers\tVERB", "demand\tNOUN", "demands\tNOUN",
    "demonstrate\tVERB", "demonstrated\tVERB", "demonstrates\tVERB", "demonstrating\tVERB",
    "demote\tVERB", "demoted\tVERB", "demotes\tVERB", "demoting\tVERB", "denial\tNOUN",
    "denials\tNOUN", "denied\tVERB", "denies\tVERB", "dense\tADJ", "densely\tADV", "deny\tVERB",
    "denying\tVERB", "depart\tVERB", "departed\tVERB", "departing\tVERB", "departs\tVERB",
    "dependable\tADJ", "dependably\tADV", "depict\tVERB", "depicted\tVERB", "depicting\tVERB",
    "depicts\tVERB", "deploy\tVERB", "deployed\tVERB", "deploying\tVERB", "deploys\tVERB",
    "depression\tNOUN", "depressions\tNOUN", "derivative\tNOUN", "derivatives\tNOUN",
    "describe\tVERB", "described\tVERB", "describes\tVERB", "describing\tVERB", "desert\tNOUN",
    "deserted\tADJ", "deserts\tNOUN", "design\tVERB", "designed\tVERB", "designing\tVERB",
    "designs\tVERB", "desire\tVERB", "desired\tVERB", "desires\tVERB", "desiring\tVERB",
    "desk\tNOUN", "desks\tNOUN", "destination\tNOUN", "destinations\tNOUN", "detach\tVERB",
    "detached\tVERB", "detaches\tVERB", "detaching\tVERB", "detect\tVERB", "detected\tVERB",
    "detecting\tVERB", "detects\tVERB", "detergent\tNOUN", "detergents\tNOUN", "detrimental\tADJ",
    "detrimentally\tADV", "develop\tVERB", "developed\tVERB", "developing\tVERB",
    "development\tNOUN", "developments\tNOUN", "develops\tVERB", "deviation\tNOUN",
    "deviations\tNOUN", "diabetes\tNOUN", "diabeteses\tNOUN", "diagnose\tVERB", "diagnosed\tVERB",
    "diagnoses\tVERB", "diagnosing\tVERB", "diagnosis\tNOUN", "diagnosises\tNOUN", "diagram\tNOUN",
    "diagrams\tNOUN", "diameter\tNOUN", "diameters\tNOUN", "dice\tVERB", "diced\tVERB",
    "dices\tVERB", "dicing\tVERB", "die\tVERB", "died\tVERB", "dies\tVERB", "diesel\tNOUN",
    "diesels\tNOUN", "diet\tNOUN", "diets\tNOUN", "difference\tNOUN", "differences\tNOUN",
    "different\tADJ", "differently\tADV", "digestion\tNOUN", "digestions\tNOUN", "digital\tADJ",
    "digitally\tADV", "dilemma\tNOUN", "dilemmas\tNOUN", "dim\tADJ", "dinner\tNOUN",
    "dinners\tNOUN", "direct\tVERB", "directed\tVERB", "directing\tVERB", "directive\tNOUN",
    "directives\tNOUN", "director\tNOUN", "directors\tNOUN", "directs\tVERB", "dirty\tADJ",
    "disappointed\tADJ", "disaster\tNOUN", "disasters\tNOUN", "disclose\tVERB", "disclosed\tVERB",
    "discloses\tVERB", "disclosing\tVERB", "discourage\tVERB", "discouraged\tVERB",
    "discourages\tVERB", "discouraging\tVERB", "discover\tVERB", "discovered\tVERB",
    "discovering\tVERB", "discovers\tVERB", "discuss\tVERB", "discussed\tVERB", "discusses\tVERB",
    "discussing\tVERB", "disease\tNOUN", "diseases\tNOUN", "dish\tNOUN", "dishes\tNOUN",
    "dishonest\tADJ", "dishonestly\tADV", "disinfectant\tNOUN", "disinfectants\tNOUN",
    "disinformation\tNOUN", "disinformations\tNOUN", "disloyal\tADJ", "disloyally\tADV",
    "dismiss\tVERB", "dismissed\tVERB", "dismisses\tVERB", "dismissing\tVERB", "dispute\tVERB",
    "disputed\tVERB", "disputes\tVERB", "disputing\tVERB", "disrespectful\tADJ",
    "disrespectfully\tADV", "dissatisfied\tADJ", "distancing\tNOUN", "distancings\tNOUN",
    "distant\tADJ", "distantly\tADV", "distort\tVERB", "distorted\tVERB", "distorting\tVERB",
    "distorts\tVERB", "distribution\tNOUN", "distributions\tNOUN", "divide\tVERB", "divided\tVERB",
    "dividend\tNOUN", "dividends\tNOUN", "divides\tVERB", "dividing\tVERB", "dizziness\tNOUN",
    "dizzinesses\tNOUN", "do\tVERB", "doctor\tNOUN", "doctors\tNOUN", "document\tVERB",
    "documented\tVERB", "documenting\tVERB", "documents\tVERB", "doed\tVERB", "doing\tVERB",
    "dolphin\tNOUN", "dolphins\tNOUN", "donate\tVERB", "donated\tVERB", "donates\tVERB",
    "donating\tVERB", "donkey\tNOUN", "donkeys\tNOUN", "donor\tNOUN", "donors\tNOUN", "door\tNOUN",
    "doors\tNOUN", "dos\tVERB", "dose\tNOUN", "doses\tNOUN", "doubt\tVERB", "doubted\tVERB",
    "doubtful\tADJ", "doubtfully\tADV", "doubting\tVERB", "doubts\tVERB", "download\tVERB",
    "downloaded\tVERB", "downloading\tVERB", "downloads\tVERB", "downstairs\tADV", "dozen\tNUM",
    "drag\tVERB", "dragged\tVERB", "dragging\tVERB", "drags\tVERB", "draw\tVERB", "drawed\tVERB",
    "drawer\tNOUN", "drawers\tNOUN", "drawing\tVERB", "draws\tVERB", "dream\tVERB", "dreamed\tVERB",
    "dreaming\tVERB", "dreams\tVERB", "dried\tVERB", "dries\tVERB", "drill\tNOUN", "drills\tNOUN",
    "drink\tNOUN", "drinks\tNOUN", "drive\tVERB", "drived\tVERB", "drives\tVERB", "driving\tVERB",
    "drop\tVERB", "dropped\tVERB", "dropping\tVERB", "drops\tVERB", "drought\tNOUN",
    "droughts\tNOUN", "drug\tNOUN", "drugs\tNOUN", "dry\tVERB", "drying\tVERB", "duck\tNOUN",
    "ducks\tNOUN", "dumb\tADJ", "dumbly\tADV", "dust\tNOUN", "dusts\tNOUN", "dying\tVERB",
    "eager\tADJ", "eagerly\tADV", "eagle\tNOUN", "eagles\tNOUN", "earlier\tADV", "early\tADJ",
    "earth\tNOUN", "earthquake\tNOUN", "earthquakes\tNOUN", "earths\tNOUN", "easy\tADJ",
    "eat\tVERB", "eated\tVERB", "eating\tVERB", "eats\tVERB", "economic\tADJ", "economies\tNOUN",
    "economy\tNOUN", "ecosystem\tNOUN", "ecosystems\tNOUN", "edit\tVERB", "editor\tNOUN",
    "editors\tNOUN", "edits\tVERB", "editted\tVERB", "editting\tVERB", "educate\tVERB",
    "educated\tVERB", "educates\tVERB", "educating\tVERB", "education\tNOUN", "educations\tNOUN",
    "effect\tNOUN", "effective\tADJ", "effectively\tADV", "effects\tNOUN", "efficacies\tNOUN",
    "efficacy\tNOUN", "efficient\tADJ", "efficiently\tADV", "effort\tNOUN", "efforts\tNOUN",
    "eight\tNUM", "eighteen\tNUM", "eighth\tNUM", "eighty\tNUM", "elbow\tNOUN", "elbows\tNOUN",
    "elderly\tADJ", "election\tNOUN", "elections\tNOUN", "electricities\tNOUN", "electricity\tNOUN",
    "electron\tNOUN", "electrons\tNOUN", "element\tNOUN", "elements\tNOUN", "elephant\tNOUN",
    "elephants\tNOUN", "eleven\tNUM", "embarrassed\tADJ", "ember\tNOUN", "embers\tNOUN",
    "emergencies\tNOUN", "emergency\tNOUN", "emit\tVERB", "emits\tVERB", "emitted\tVERB",
    "emitting\tVERB", "emoji\tNOUN", "emojis\tNOUN", "emotion\tNOUN", "emotions\tNOUN",
    "emphasize\tVERB", "emphasized\tVERB", "emphasizes\tVERB", "emphasizing\tVERB", "empty\tADJ",
    "encourage\tVERB", "encouraged\tVERB", "encourages\tVERB", "encouraging\tVERB", "encrypt\tVERB",
    "encrypted\tVERB", "encrypting\tVERB", "encrypts\tVERB", "end\tNOUN", "endeavor\tVERB",
    "endeavored\tVERB", "endeavoring\tVERB", "endeavors\tVERB", "endorse\tVERB", "endorsed\tVERB",
    "endorses\tVERB", "endorsing\tVERB", "ends\tNOUN", "energetic\tADJ", "energies\tNOUN",
    "energy\tNOUN", "enforce\tVERB", "enforced\tVERB", "enforcement\tNOUN", "enforcements\tNOUN",
    "enforces\tVERB", "enforcing\tVERB", "engineer\tVERB", "engineered\tVERB", "engineering\tVERB",
    "engineers\tVERB", "enjoy\tVERB", "enjoyed\tVERB", "enjoying\tVERB", "enjoys\tVERB",
    "enormous\tADJ", "enormously\tADV", "enough\tADV", "enroll\tVERB", "enrolled\tVERB",
    "enrolling\tVERB", "enrolls\tVERB", "enterprise\tNOUN", "enterprises\tNOUN",
    "enthusiastic\tADJ", "entirely\tADV", "entrepreneur\tNOUN", "entrepreneurs\tNOUN",
    "environment\tNOUN", "environments\tNOUN", "enzyme\tNOUN", "enzymes\tNOUN", "epidemic\tNOUN",
    "epidemics\tNOUN", "episode\tNOUN", "episodes\tNOUN", "epoch\tNOUN", "epoches\tNOUN",
    "equal\tADJ", "equally\tADV", "equation\tNOUN", "equations\tNOUN", "equities\tNOUN",
    "equity\tNOUN", "essential\tADJ", "essentially\tADV", "estate\tNOUN", "estates\tNOUN",
    "estimate\tVERB", "estimated\tVERB", "estimates\tVERB", "estimating\tVERB", "evaluate\tVERB",
    "evaluated\tVERB", "evaluates\tVERB", "evaluating\tVERB", "even\tADV", "event\tNOUN",
    "events\tNOUN", "everybody\tPRON", "everyone\tPRON", "everything\tPRON", "everywhere\tADV",
    "evidence\tNOUN", "evidences\tNOUN", "evolution\tNOUN", "evolutions\tNOUN", "evolve\tVERB",
    "evolved\tVERB", "evolves\tVERB", "evolving\tVERB", "exaggerate\tVERB", "exaggerated\tVERB",
    "exaggerates\tVERB", "exaggerating\tVERB", "examine\tVERB", "examined\tVERB", "examines\tVERB",
    "examining\tVERB", "example\tNOUN", "examples\tNOUN", "exceptional\tADJ", "exceptionally\tADV",
    "exchange\tVERB", "exchanged\tVERB", "exchanges\tVERB", "exchanging\tVERB", "excited\tADJ",
    "exercise\tNOUN", "exercises\tNOUN", "exhausted\tADJ", "expand\tVERB", "expanded\tVERB",
    "expanding\tVERB", "expands\tVERB", "expect\tVERB", "expected\tVERB", "expecting\tVERB",
    "expects\tVERB", "expense\tNOUN", "expenses\tNOUN", "expensive\tADJ", "expensively\tADV",
    "experience\tNOUN", "experiences\tNOUN", "expert\tNOUN", "experts\tNOUN", "explain\tVERB",
    "explained\tVERB", "explaining\tVERB", "explains\tVERB", "explore\tVERB", "explored\tVERB",
    "explores\tVERB", "exploring\tVERB", "exponent\tNOUN", "exponents\tNOUN", "export\tNOUN",
    "exports\tNOUN", "expose\tVERB", "exposed\tVERB", "exposes\tVERB", "exposing\tVERB",
    "exposure\tNOUN", "exposures\tNOUN", "extend\tVERB", "extended\tVERB", "extending\tVERB",
    "extends\tVERB", "extract\tVERB", "extracted\tVERB", "extracting\tVERB", "extracts\tVERB",
    "extraordinary\tADJ", "extreme\tADJ", "extremely\tADV", "eye\tNOUN", "eyes\tNOUN",
    "fabric\tNOUN", "fabricate\tVERB", "fabricated\tVERB", "fabricates\tVERB", "fabricating\tVERB",
    "fabrication\tNOUN", "fabrications\tNOUN", "fabrics\tNOUN", "face\tNOUN", "faces\tNOUN",
    "fact\tNOUN", "factor\tNOUN", "factories\tNOUN", "factors\tNOUN", "factory\tNOUN",
    "facts\tNOUN", "factual\tADJ", "factually\tADV", "fail\tVERB", "failed\tVERB", "failing\tVERB",
    "fails\tVERB", "fair\tADJ", "fairly\tADV", "faithful\tADJ", "faithfully\tADV", "fake\tADJ",
    "fakely\tADV", "fall\tVERB", "falled\tVERB", "falling\tVERB", "falls\tVERB", "false\tADJ",
    "falsehood\tNOUN", "falsehoods\tNOUN", "falsely\tADV", "falter\tVERB", "faltered\tVERB",
    "faltering\tVERB", "falters\tVERB", "families\tNOUN", "family\tNOUN", "fan\tNOUN", "fans\tNOUN",
    "far\tADJ", "farm\tNOUN", "farms\tNOUN", "fast\tADJ", "fastly\tADV", "fat\tNOUN", "fatal\tADJ",
    "fatally\tADV", "father\tNOUN", "fathers\tNOUN", "fatigue\tNOUN", "fatigues\tNOUN",
    "fats\tNOUN", "favorable\tADJ", "favorably\tADV", "fax\tVERB", "faxed\tVERB", "faxes\tVERB",
    "faxing\tVERB", "fear\tNOUN", "fearful\tADJ", "fearfully\tADV", "fears\tNOUN", "feature\tNOUN",
    "features\tNOUN", "feed\tNOUN", "feeds\tNOUN", "feel\tVERB", "feeled\tVERB", "feeling\tVERB",
    "feels\tVERB", "fence\tNOUN", "fences\tNOUN", "ferries\tNOUN", "ferry\tNOUN", "fever\tNOUN",
    "fevers\tNOUN", "few\tADJ", "fiber\tNOUN", "fibers\tNOUN", "fictional\tADJ", "fictionally\tADV",
    "field\tNOUN", "fields\tNOUN", "fifteen\tNUM", "fifth\tNUM", "fifty\tNUM", "fight\tVERB",
    "fighted\tVERB", "fighting\tVERB", "fights\tVERB", "figure\tNOUN", "figures\tNOUN",
    "file\tNOUN", "files\tNOUN", "film\tVERB", "filmed\tVERB", "filming\tVERB", "films\tVERB",
    "filter\tVERB", "filtered\tVERB", "filtering\tVERB", "filters\tVERB", "filtration\tNOUN",
    "filtrations\tNOUN", "finance\tVERB", "financed\tVERB", "finances\tVERB", "financing\tVERB",
    "find\tVERB", "finded\tVERB", "finding\tVERB", "finds\tVERB", "fine\tNOUN", "fines\tNOUN",
    "finger\tNOUN", "fingers\tNOUN", "fire\tVERB", "fired\tVERB", "fires\tVERB", "firing\tVERB",
    "firm\tNOUN", "firmly\tADV", "firms\tNOUN", "first\tNUM", "firstly\tADV", "fish\tNOUN",
    "fishes\tNOUN", "fitness\tNOUN", "fitnesses\tNOUN", "five\tNUM", "fix\tVERB", "fixed\tVERB",
    "fixes\tVERB", "fixing\tVERB", "flag\tVERB", "flagged\tVERB", "flagging\tVERB", "flags\tVERB",
    "flame\tNOUN", "flames\tNOUN", "flavor\tNOUN", "flavors\tNOUN", "flea\tNOUN", "fleas\tNOUN",
    "flied\tVERB", "flies\tVERB", "flight\tNOUN", "flights\tNOUN", "flock\tNOUN", "flocks\tNOUN",
    "flood\tNOUN", "floods\tNOUN", "floor\tNOUN", "floors\tNOUN", "flourish\tVERB",
    "flourished\tVERB", "flourishes\tVERB", "flourishing\tVERB", "flower\tNOUN", "flowers\tNOUN",
    "flu\tNOUN", "fluctuate\tVERB", "fluctuated\tVERB", "fluctuates\tVERB", "fluctuating\tVERB",
    "flus\tNOUN", "fly\tVERB", "flying\tVERB", "focus\tVERB", "focused\tVERB", "focuses\tVERB",
    "focusing\tVERB", "foggy\tADJ", "fold\tVERB", "folded\tVERB", "folder\tNOUN", "folders\tNOUN",
    "folding\tVERB", "folds\tVERB", "follow\tVERB", "followed\tVERB", "follower\tNOUN",
    "followers\tNOUN", "following\tVERB", "followings\tNOUN", "follows\tVERB", "food\tNOUN",
    "foods\tNOUN", "foolish\tADJ", "foolishly\tADV", "foot\tNOUN", "footnote\tNOUN",
    "footnotes\tNOUN", "foots\tNOUN", "forbid\tVERB", "forbided\tVERB", "forbiding\tVERB",
    "forbids\tVERB", "force\tNOUN", "forces\tNOUN", "forecast\tVERB", "forecasted\tVERB",
    "forecasting\tVERB", "forecasts\tVERB", "forest\tNOUN", "forests\tNOUN", "forget\tVERB",
    "forgeted\tVERB", "forgeting\tVERB", "forgets\tVERB", "forgive\tVERB", "forgived\tVERB",
    "forgives\tVERB", "forgiving\tVERB", "fork\tNOUN", "forks\tNOUN", "form\tNOUN", "forms\tNOUN",
    "formula\tNOUN", "formulas\tNOUN", "forty\tNUM", "forward\tADV", "fossil\tNOUN",
    "fossils\tNOUN", "foul\tNOUN", "fouls\tNOUN", "four\tNUM", "fourteen\tNUM", "fourth\tNUM",
    "fox\tNOUN", "foxes\tNOUN", "fraction\tNOUN", "fractions\tNOUN", "fracture\tNOUN",
    "fractures\tNOUN", "frame\tNOUN", "frames\tNOUN", "fraud\tNOUN", "frauds\tNOUN",
    "fraudulent\tADJ", "fraudulently\tADV", "free\tADJ", "freely\tADV", "freeze\tVERB",
    "freezed\tVERB", "freezes\tVERB", "freezing\tVERB", "frequencies\tNOUN", "frequency\tNOUN",
    "frequent\tADJ", "frequently\tADV", "fresh\tADJ", "freshly\tADV", "friction\tNOUN",
    "frictions\tNOUN", "fried\tVERB", "friend\tNOUN", "friendly\tADJ", "friends\tNOUN",
    "fries\tVERB", "frozen\tADJ", "frozenly\tADV", "fruit\tNOUN", "fruits\tNOUN", "frustrated\tADJ",
    "fry\tVERB", "frying\tVERB", "fuel\tNOUN", "fuels\tNOUN", "full\tADJ", "fully\tADV",
    "function\tNOUN", "functions\tNOUN", "fund\tVERB", "funded\tVERB", "funding\tVERB",
    "funds\tVERB", "furious\tADJ", "furiously\tADV", "furniture\tNOUN", "furnitures\tNOUN",
    "future\tNOUN", "futures\tNOUN", "gain\tVERB", "gained\tVERB", "gaining\tVERB", "gains\tVERB",
    "galaxies\tNOUN", "galaxy\tNOUN", "gamble\tVERB", "gambled\tVERB", "gambles\tVERB",
    "gambling\tVERB", "game\tNOUN", "games\tNOUN", "garage\tNOUN", "garages\tNOUN", "garden\tNOUN",
    "gardens\tNOUN", "garlic\tNOUN", "garlics\tNOUN", "gas\tNOUN", "gases\tNOUN", "gasoline\tNOUN",
    "gasolines\tNOUN", "gate\tNOUN", "gates\tNOUN", "gather\tVERB", "gathered\tVERB",
    "gathering\tVERB", "gathers\tVERB", "gene\tNOUN", "generally\tADV", "generous\tADJ",
    "generously\tADV", "genes\tNOUN", "genome\tNOUN", "genomes\tNOUN", "gentle\tADJ", "gently\tADV",
    "genuine\tADJ", "genuinely\tADV", "germ\tNOUN", "germs\tNOUN", "get\tVERB", "gets\tVERB",
    "getted\tVERB", "getting\tVERB", "giant\tADJ", "giantly\tADV", "ginger\tNOUN", "gingers\tNOUN",
    "girl\tNOUN", "girls\tNOUN", "give\tVERB", "gived\tVERB", "gives\tVERB", "giving\tVERB",
    "glass\tNOUN", "glasses\tNOUN", "global\tADJ", "globally\tADV", "glove\tNOUN", "gloves\tNOUN",
    "go\tVERB", "goal\tNOUN", "goals\tNOUN", "goat\tNOUN", "goats\tNOUN", "goed\tVERB",
    "going\tVERB", "good\tADJ", "goodly\tADV", "goose\tNOUN", "gooses\tNOUN", "gos\tVERB",
    "government\tNOUN", "governments\tNOUN", "governor\tNOUN", "governors\tNOUN", "grab\tVERB",
    "grabbed\tVERB", "grabbing\tVERB", "grabs\tVERB", "gradient\tNOUN", "gradients\tNOUN",
    "gradual\tADJ", "gradually\tADV", "graduate\tVERB", "graduated\tVERB", "graduates\tVERB",
    "graduating\tVERB", "grammar\tNOUN", "grammars\tNOUN", "granite\tNOUN", "granites\tNOUN",
    "grape\tNOUN", "grapes\tNOUN", "graph\tNOUN", "graphs\tNOUN", "grasp\tVERB", "grasped\tVERB",
    "grasping\tVERB", "grasps\tVERB", "grass\tNOUN", "grasses\tNOUN", "grate\tVERB", "grated\tVERB",
    "grateful\tADJ", "gratefully\tADV", "grates\tVERB", "grating\tVERB", "gravel\tNOUN",
    "gravels\tNOUN", "gravities\tNOUN", "gravity\tNOUN", "great\tADJ", "greatly\tADV",
    "greedy\tADJ", "grief\tNOUN", "griefs\tNOUN", "grill\tVERB", "grilled\tVERB", "grilling\tVERB",
    "grills\tVERB", "grip\tVERB", "gripped\tVERB", "gripping\tVERB", "grips\tVERB", "ground\tNOUN",
    "grounds\tNOUN", "group\tNOUN", "groups\tNOUN", "grow\tVERB", "growed\tVERB", "growing\tVERB",
    "grows\tVERB", "guess\tVERB", "guessed\tVERB", "guesses\tVERB", "guessing\tVERB",
    "guideline\tNOUN", "guidelines\tNOUN", "guilty\tADJ", "guy\tNOUN", "guys\tNOUN", "gym\tNOUN",
    "gyms\tNOUN", "habitat\tNOUN", "habitats\tNOUN", "hack\tVERB", "hacked\tVERB", "hacking\tVERB",
    "hacks\tVERB", "hair\tNOUN", "hairs\tNOUN", "half\tNUM", "hammer\tNOUN", "hammers\tNOUN",
    "hand\tNOUN", "handle\tVERB", "handled\tVERB", "handles\tVERB", "handling\tVERB", "hands\tNOUN",
    "hang\tVERB", "hanged\tVERB", "hanging\tVERB", "hangs\tVERB", "happen\tVERB", "happened\tVERB",
    "happening\tVERB", "happens\tVERB", "happy\tADJ", "hard\tADJ", "hardly\tADV", "harmful\tADJ",
    "harmfully\tADV", "harmless\tADJ", "harmlessly\tADV", "harsh\tADJ", "harshly\tADV",
    "harvest\tNOUN", "harvests\tNOUN", "hashtag\tNOUN", "hashtags\tNOUN", "have\tVERB",
    "haved\tVERB", "haves\tVERB", "having\tVERB", "hawk\tNOUN", "hawks\tNOUN", "he\tPRON",
    "head\tNOUN", "headache\tNOUN", "headaches\tNOUN", "headline\tNOUN", "headlines\tNOUN",
    "headphone\tNOUN", "headphones\tNOUN", "heads\tNOUN", "heal\tVERB", "healed\tVERB",
    "healing\tVERB", "heals\tVERB", "health\tNOUN", "healths\tNOUN", "healthy\tADJ", "hear\tVERB",
    "heared\tVERB", "hearing\tVERB", "hears\tVERB", "heart\tNOUN", "hearts\tNOUN", "heavy\tADJ",
    "helmet\tNOUN", "helmets\tNOUN", "help\tVERB", "helped\tVERB", "helpful\tADJ", "helpfully\tADV",
    "helping\tVERB", "helps\tVERB", "hen\tNOUN", "hens\tNOUN", "her\tPRON", "herb\tNOUN",
    "herbs\tNOUN", "herd\tNOUN", "herds\tNOUN", "here\tADV", "hers\tPRON", "herself\tPRON",
    "hide\tVERB", "hided\tVERB", "hides\tVERB", "hiding\tVERB", "high\tADJ", "highlight\tVERB",
    "highlighted\tVERB", "highlighting\tVERB", "highlights\tVERB", "highly\tADV", "hill\tNOUN",
    "hills\tNOUN", "him\tPRON", "himself\tPRON", "hire\tVERB", "hired\tVERB", "hires\tVERB",
    "hiring\tVERB", "his\tPRON", "histories\tNOUN", "history\tNOUN", "hit\tVERB", "hits\tVERB",
    "hitted\tVERB", "hitting\tVERB", "hoax\tNOUN", "hoaxes\tNOUN", "hoe\tNOUN", "hoes\tNOUN",
    "hold\tVERB", "holded\tVERB", "holding\tVERB", "holds\tVERB", "home\tNOUN", "homes\tNOUN",
    "honest\tADJ", "honestly\tADV", "honey\tNOUN", "honeys\tNOUN", "hoop\tNOUN", "hoops\tNOUN",
    "hope\tVERB", "hoped\tVERB", "hopeful\tADJ", "hopefully\tADV", "hopeless\tADJ",
    "hopelessly\tADV", "hopes\tVERB", "hoping\tVERB", "hormone\tNOUN", "hormones\tNOUN",
    "horse\tNOUN", "horses\tNOUN", "hospital\tNOUN", "hospitalize\tVERB", "hospitalized\tVERB",
    "hospitalizes\tVERB", "hospitalizing\tVERB", "hospitals\tNOUN", "hostel\tNOUN", "hostels\tNOUN",
    "hostile\tADJ", "hostily\tADV", "hot\tADJ", "hotel\tNOUN", "hotels\tNOUN", "hour\tNOUN",
    "hours\tNOUN", "house\tNOUN", "houses\tNOUN", "huge\tADJ", "hugely\tADV", "humble\tADJ",
    "humbly\tADV", "humid\tADJ", "humidities\tNOUN", "humidity\tNOUN", "humidly\tADV",
    "hundred\tNUM", "hygiene\tNOUN", "hygienes\tNOUN", "hygienic\tADJ", "hypothesize\tVERB",
    "hypothesized\tVERB", "hypothesizes\tVERB", "hypothesizing\tVERB", "i\tPRON", "icon\tNOUN",
    "icons\tNOUN", "idea\tNOUN", "ideas\tNOUN", "identified\tVERB", "identifies\tVERB",
    "identify\tVERB", "identifying\tVERB", "idle\tADJ", "idly\tADV", "ignorance\tNOUN",
    "ignorances\tNOUN", "ignorant\tADJ", "ignorantly\tADV", "ignore\tVERB", "ignored\tVERB",
    "ignores\tVERB", "ignoring\tVERB", "ill\tADJ", "illegal\tADJ", "illegally\tADV",
    "illegitimate\tADJ", "illegitimately\tADV", "illiterate\tADJ", "illiterately\tADV",
    "illustrate\tVERB", "illustrated\tVERB", "illustrates\tVERB", "illustrating\tVERB",
    "image\tNOUN", "images\tNOUN", "imagine\tVERB", "imagined\tVERB", "imagines\tVERB",
    "imagining\tVERB", "immediate\tADJ", "immediately\tADV", "immune\tADJ", "immunely\tADV",
    "immunities\tNOUN", "immunity\tNOUN", "impact\tVERB", "impacted\tVERB", "impacting\tVERB",
    "impacts\tVERB", "implausible\tADJ", "implausibly\tADV", "implement\tVERB", "implemented\tVERB",
    "implementing\tVERB", "implements\tVERB", "implied\tVERB", "implies\tVERB", "imply\tVERB",
    "implying\tVERB", "import\tNOUN", "important\tADJ", "importantly\tADV", "imports\tNOUN",
    "improbable\tADJ", "improbably\tADV", "improve\tVERB", "improved\tVERB", "improves\tVERB",
    "improving\tVERB", "inaccurate\tADJ", "inaccurately\tADV", "inactive\tADJ", "inactively\tADV",
    "incident\tNOUN", "incidents\tNOUN", "include\tVERB", "included\tVERB", "includes\tVERB",
    "including\tVERB", "income\tNOUN", "incomes\tNOUN", "incorrect\tADJ", "incorrectly\tADV",
    "increase\tVERB", "increased\tVERB", "increases\tVERB", "increasing\tVERB", "incredible\tADJ",
    "incredibly\tADV", "indeed\tADV", "indicate\tVERB", "indicated\tVERB", "indicates\tVERB",
    "indicating\tVERB", "indifferent\tADJ", "indifferently\tADV", "indoors\tADV",
    "industries\tNOUN", "industry\tNOUN", "ineffective\tADJ", "ineffectively\tADV", "infect\tVERB",
    "infected\tVERB", "infecting\tVERB", "infection\tNOUN", "infections\tNOUN", "infectious\tADJ",
    "infectiously\tADV", "infects\tVERB", "infer\tVERB", "inferred\tVERB", "inferring\tVERB",
    "infers\tVERB", "inflammation\tNOUN", "inflammations\tNOUN", "inflation\tNOUN",
    "inflations\tNOUN", "influence\tVERB", "influenced\tVERB", "influencer\tNOUN",
    "influencers\tNOUN", "influences\tVERB", "influencing\tVERB", "information\tNOUN",
    "informations\tNOUN", "informed\tADJ", "infrequent\tADJ", "infrequently\tADV",
    "ingredient\tNOUN", "ingredients\tNOUN", "inject\tVERB", "injected\tVERB", "injecting\tVERB",
    "injection\tNOUN", "injections\tNOUN", "injects\tVERB", "innocent\tADJ", "innocently\tADV",
    "innovate\tVERB", "innovated\tVERB", "innovates\tVERB", "innovating\tVERB", "insect\tNOUN",
    "insects\tNOUN", "insert\tVERB", "inserted\tVERB", "inserting\tVERB", "inserts\tVERB",
    "insight\tNOUN", "insights\tNOUN", "insignificant\tADJ", "insignificantly\tADV", "insist\tVERB",
    "insisted\tVERB", "insisting\tVERB", "insists\tVERB", "insomnia\tNOUN", "insomnias\tNOUN",
    "install\tVERB", "installed\tVERB", "installing\tVERB", "installs\tVERB", "instant\tADJ",
    "instantly\tADV", "instinct\tNOUN", "instincts\tNOUN", "instruct\tVERB", "instructed\tVERB",
    "instructing\tVERB", "instructs\tVERB", "insurance\tNOUN", "insurances\tNOUN", "integer\tNOUN",
    "integers\tNOUN", "integral\tNOUN", "integrals\tNOUN", "integrate\tVERB", "integrated\tVERB",
    "integrates\tVERB", "integrating\tVERB", "intelligent\tADJ", "intelligently\tADV",
    "interest\tNOUN", "interested\tADJ", "interests\tNOUN", "internet\tNOUN", "internets\tNOUN",
    "interview\tVERB", "interviewed\tVERB", "interviewing\tVERB", "interviews\tVERB",
    "intestine\tNOUN", "intestines\tNOUN", "intuition\tNOUN", "intuitions\tNOUN", "invalid\tADJ",
    "invalidly\tADV", "invent\tVERB", "invented\tVERB", "inventing\tVERB", "inventories\tNOUN",
    "inventory\tNOUN", "invents\tVERB", "invest\tVERB", "invested\tVERB", "investigate\tVERB",
    "investigated\tVERB", "investigates\tVERB", "investigating\tVERB", "investing\tVERB",
    "investment\tNOUN", "investments\tNOUN", "invests\tVERB", "invoice\tNOUN", "invoices\tNOUN",
    "iron\tVERB", "ironned\tVERB", "ironning\tVERB", "irons\tVERB", "irregular\tADJ",
    "irregularly\tADV", "irresponsible\tADJ", "irresponsibly\tADV", "island\tNOUN", "islands\tNOUN",
    "isolate\tVERB", "isolated\tVERB", "isolates\tVERB", "isolating\tVERB", "isolation\tNOUN",
    "isolations\tNOUN", "isotope\tNOUN", "isotopes\tNOUN", "issue\tNOUN", "issues\tNOUN",
    "it\tPRON", "itch\tNOUN", "itches\tNOUN", "item\tNOUN", "items\tNOUN", "iteration\tNOUN",
    "iterations\tNOUN", "its\tPRON", "itself\tPRON", "jab\tNOUN", "jabs\tNOUN", "jaw\tNOUN",
    "jaws\tNOUN", "jersey\tNOUN", "jerseys\tNOUN", "job\tNOUN", "jobs\tNOUN", "journalist\tNOUN",
    "journalists\tNOUN", "journey\tNOUN", "journeys\tNOUN", "joyful\tADJ", "joyfully\tADV",
    "juice\tNOUN", "juices\tNOUN", "just\tADJ", "justly\tADV", "keen\tADJ", "keenly\tADV",
    "keep\tVERB", "keeped\tVERB", "keeping\tVERB", "keeps\tVERB", "kettle\tNOUN", "kettles\tNOUN",
    "key\tNOUN", "keyboard\tNOUN", "keyboards\tNOUN", "keys\tNOUN", "kid\tNOUN", "kidney\tNOUN",
    "kidneys\tNOUN", "kids\tNOUN", "kill\tVERB", "killed\tVERB", "killing\tVERB", "kills\tVERB",
    "kind\tNOUN", "kindly\tADV", "kinds\tNOUN", "knee\tNOUN", "knees\tNOUN", "knife\tNOUN",
    "knifes\tNOUN", "know\tVERB", "knowed\tVERB", "knowing\tVERB", "knowledge\tNOUN",
    "knowledges\tNOUN", "knows\tVERB", "lab\tNOUN", "label\tVERB", "labeled\tVERB",
    "labeling\tVERB", "labels\tVERB", "laboratories\tNOUN", "laboratory\tNOUN", "labs\tNOUN",
    "ladder\tNOUN", "ladders\tNOUN", "lake\tNOUN", "lakes\tNOUN", "lamp\tNOUN", "lamps\tNOUN",
    "land\tNOUN", "lands\tNOUN", "language\tNOUN", "languages\tNOUN", "lap\tNOUN", "laps\tNOUN",
    "laptop\tNOUN", "laptops\tNOUN", "large\tADJ", "largely\tADV", "last\tADJ", "lastly\tADV",
    "late\tADJ", "lately\tADV", "later\tADV", "launch\tVERB", "launched\tVERB", "launches\tVERB",
    "launching\tVERB", "laundries\tNOUN", "laundry\tNOUN", "law\tNOUN", "lawful\tADJ",
    "lawfully\tADV", "lawn\tNOUN", "lawns\tNOUN", "laws\tNOUN", "layer\tNOUN", "layers\tNOUN",
    "lazy\tADJ", "lead\tVERB", "leaded\tVERB", "leader\tNOUN", "leaders\tNOUN", "leading\tVERB",
    "leads\tVERB", "league\tNOUN", "leagues\tNOUN", "learn\tVERB", "learned\tVERB",
    "learning\tVERB", "learns\tVERB", "leather\tNOUN", "leathers\tNOUN", "leave\tVERB",
    "leaved\tVERB", "leaves\tVERB", "leaving\tVERB", "lecture\tVERB", "lectured\tVERB",
    "lectures\tVERB", "lecturing\tVERB", "legal\tADJ", "legally\tADV", "legitimate\tADJ",
    "legitimately\tADV", "lemma\tNOUN", "lemmas\tNOUN", "lemon\tNOUN", "lemons\tNOUN", "lend\tVERB",
    "lended\tVERB", "lending\tVERB", "lends\tVERB", "let\tVERB", "lethal\tADJ", "lethally\tADV",
    "lets\tVERB", "letted\tVERB", "letter\tNOUN", "letters\tNOUN", "letting\tVERB", "lettuce\tNOUN",
    "lettuces\tNOUN", "level\tNOUN", "levels\tNOUN", "liabilities\tNOUN", "liability\tNOUN",
    "liberal\tADJ", "liberally\tADV", "lie\tVERB", "lied\tVERB", "lies\tVERB", "life\tNOUN",
    "lifes\tNOUN", "lift\tVERB", "lifted\tVERB", "lifting\tVERB", "lifts\tVERB", "light\tNOUN",
    "lightly\tADV", "lights\tNOUN", "like\tVERB", "liked\tVERB", "likely\tADJ", "likes\tVERB",
    "liking\tVERB", "limestone\tNOUN", "limestones\tNOUN", "limit\tVERB", "limits\tVERB",
    "limitted\tVERB", "limitting\tVERB", "line\tNOUN", "lines\tNOUN", "link\tVERB", "linked\tVERB",
    "linking\tVERB", "links\tVERB", "lion\tNOUN", "lions\tNOUN", "lip\tNOUN", "lips\tNOUN",
    "liquid\tADJ", "liquidly\tADV", "listen\tVERB", "listened\tVERB", "listening\tVERB",
    "listens\tVERB", "literacies\tNOUN", "literacy\tNOUN", "literally\tADV", "literate\tADJ",
    "literately\tADV", "little\tADJ", "littly\tADV", "live\tVERB", "lived\tVERB", "liver\tNOUN",
    "livers\tNOUN", "lives\tVERB", "living\tVERB", "load\tVERB", "loaded\tVERB", "loading\tVERB",
    "loads\tVERB", "loan\tNOUN", "loans\tNOUN", "lobbies\tNOUN", "lobby\tNOUN", "lobster\tNOUN",
    "lobsters\tNOUN", "local\tADJ", "locally\tADV", "lock\tNOUN", "lockdown\tNOUN",
    "lockdowns\tNOUN", "locks\tNOUN", "log\tVERB", "logarithm\tNOUN", "logarithms\tNOUN",
    "logged\tVERB", "logging\tVERB", "logic\tNOUN", "logics\tNOUN", "login\tNOUN", "logins\tNOUN",
    "logs\tVERB", "long\tADJ", "longly\tADV", "look\tVERB", "looked\tVERB", "looking\tVERB",
    "looks\tVERB", "lose\tVERB", "losed\tVERB", "loser\tNOUN", "losers\tNOUN", "loses\tVERB",
    "losing\tVERB", "loss\tNOUN", "losses\tNOUN", "lot\tNOUN", "lots\tNOUN", "loud\tADJ",
    "loudly\tADV", "love\tVERB", "loved\tVERB", "loves\tVERB", "loving\tVERB", "low\tADJ",
    "loyal\tADJ", "loyally\tADV", "luggage\tNOUN", "luggages\tNOUN", "lunch\tNOUN", "lunches\tNOUN",
    "lung\tNOUN", "lungs\tNOUN", "lying\tVERB", "magnet\tNOUN", "magnets\tNOUN", "magnitude\tNOUN",
    "magnitudes\tNOUN", "mail\tVERB", "mailed\tVERB", "mailing\tVERB", "mails\tVERB", "mainly\tADV",
    "maintain\tVERB", "maintained\tVERB", "maintaining\tVERB", "maintains\tVERB", "major\tADJ",
    "majorly\tADV", "make\tVERB", "maked\tVERB", "makes\tVERB", "making\tVERB", "man\tNOUN",
    "manage\tVERB", "managed\tVERB", "manages\tVERB", "managing\tVERB", "mandate\tVERB",
    "mandated\tVERB", "mandates\tVERB", "mandating\tVERB", "mandatory\tADJ", "manipulate\tVERB",
    "manipulated\tVERB", "manipulates\tVERB", "manipulating\tVERB", "mans\tNOUN", "map\tNOUN",
    "maps\tNOUN", "marathon\tNOUN", "marathons\tNOUN", "marble\tNOUN", "marbles\tNOUN",
    "march\tVERB", "marched\tVERB", "marches\tVERB", "marching\tVERB", "mark\tVERB", "marked\tVERB",
    "market\tNOUN", "markets\tNOUN", "marking\tVERB", "marks\tVERB", "mash\tVERB", "mashed\tVERB",
    "mashes\tVERB", "mashing\tVERB", "mask\tVERB", "masked\tVERB", "masking\tVERB", "masks\tVERB",
    "massive\tADJ", "massively\tADV", "match\tNOUN", "matches\tNOUN", "math\tNOUN", "maths\tNOUN",
    "matrix\tNOUN", "matrixes\tNOUN", "matter\tNOUN", "matters\tNOUN", "mattress\tNOUN",
    "mattresses\tNOUN", "maybe\tADV", "mayor\tNOUN", "mayors\tNOUN", "me\tPRON", "meal\tNOUN",
    "meals\tNOUN", "mean\tVERB", "meaned\tVERB", "meaning\tVERB", "meanings\tNOUN", "means\tVERB",
    "measure\tVERB", "measured\tVERB", "measures\tVERB", "measuring\tVERB", "medal\tNOUN",
    "medals\tNOUN", "media\tNOUN", "median\tNOUN", "medians\tNOUN", "medias\tNOUN", "medical\tADJ",
    "medically\tADV", "medication\tNOUN", "medications\tNOUN", "medicine\tNOUN", "medicines\tNOUN",
    "meditation\tNOUN", "meditations\tNOUN", "meet\tVERB", "meeted\tVERB", "meeting\tVERB",
    "meets\tVERB", "melon\tNOUN", "melons\tNOUN", "melted\tADJ", "member\tNOUN", "members\tNOUN",
    "membrane\tNOUN", "membranes\tNOUN", "meme\tNOUN", "memes\tNOUN", "memorize\tVERB",
    "memorized\tVERB", "memorizes\tVERB", "memorizing\tVERB", "mention\tVERB", "mentioned\tVERB",
    "mentioning\tVERB", "mentions\tVERB", "mentor\tVERB", "mentored\tVERB", "mentoring\tVERB",
    "mentors\tVERB", "metabolism\tNOUN", "metabolisms\tNOUN", "metal\tNOUN", "metals\tNOUN",
    "metric\tNOUN", "metrics\tNOUN", "microbe\tNOUN", "microbes\tNOUN", "microphone\tNOUN",
    "microphones\tNOUN", "migraine\tNOUN", "migraines\tNOUN", "migrate\tVERB", "migrated\tVERB",
    "migrates\tVERB", "migrating\tVERB", "mild\tADJ", "mildly\tADV", "milk\tNOUN", "milks\tNOUN",
    "million\tNUM", "mind\tNOUN", "minds\tNOUN", "mine\tPRON", "mineral\tNOUN", "minerals\tNOUN",
    "minimal\tADJ", "minimally\tADV", "minister\tNOUN", "ministers\tNOUN", "minor\tADJ",
    "minorly\tADV", "minute\tNOUN", "minutes\tNOUN", "mirror\tNOUN", "mirrors\tNOUN",
    "misinformation\tNOUN", "misinformations\tNOUN", "mislead\tVERB", "misleaded\tVERB",
    "misleading\tVERB", "misleadingly\tADV", "misleads\tVERB", "miss\tVERB", "missed\tVERB",
    "misses\tVERB", "missing\tVERB", "misty\tADJ", "mix\tVERB", "mixed\tVERB", "mixes\tVERB",
    "mixing\tVERB", "mixture\tNOUN", "mixtures\tNOUN", "mobilize\tVERB", "mobilized\tVERB",
    "mobilizes\tVERB", "mobilizing\tVERB", "mode\tNOUN", "model\tVERB", "modeled\tVERB",
    "modeling\tVERB", "models\tVERB", "modem\tNOUN", "modems\tNOUN", "moderate\tVERB",
    "moderated\tVERB", "moderately\tADV", "moderates\tVERB", "moderating\tVERB", "modes\tNOUN",
    "modest\tADJ", "modestly\tADV", "molecule\tNOUN", "molecules\tNOUN", "moment\tNOUN",
    "moments\tNOUN", "momentum\tNOUN", "momentums\tNOUN", "money\tNOUN", "moneys\tNOUN",
    "monitor\tVERB", "monitored\tVERB", "monitoring\tVERB", "monitors\tVERB", "month\tNOUN",
    "monthly\tADV", "months\tNOUN", "moon\tNOUN", "moons\tNOUN", "mop\tVERB", "mopped\tVERB",
    "mopping\tVERB", "mops\tVERB", "morning\tNOUN", "mornings\tNOUN", "mortgage\tNOUN",
    "mortgages\tNOUN", "mosquito\tNOUN", "mosquitos\tNOUN", "mostly\tADV", "motel\tNOUN",
    "motels\tNOUN", "moth\tNOUN", "mother\tNOUN", "mothers\tNOUN", "moths\tNOUN", "mountain\tNOUN",
    "mountains\tNOUN", "mouse\tNOUN", "mouses\tNOUN", "move\tVERB", "moved\tVERB", "movement\tNOUN",
    "movements\tNOUN", "moves\tVERB", "movie\tNOUN", "movies\tNOUN", "moving\tVERB", "mud\tNOUN",
    "muds\tNOUN", "mug\tNOUN", "mugs\tNOUN", "mule\tNOUN", "mules\tNOUN", "multiplied\tVERB",
    "multiplies\tVERB", "multiply\tVERB", "multiplying\tVERB", "muscle\tNOUN", "muscles\tNOUN",
    "music\tNOUN", "musics\tNOUN", "mutate\tVERB", "mutated\tVERB", "mutates\tVERB",
    "mutating\tVERB", "mutation\tNOUN", "mutations\tNOUN", "my\tPRON", "myself\tPRON",
    "mysteries\tNOUN", "mystery\tNOUN", "myth\tNOUN", "myths\tNOUN", "nail\tNOUN", "nails\tNOUN",
    "name\tNOUN", "names\tNOUN", "napkin\tNOUN", "napkins\tNOUN", "narrate\tVERB", "narrated\tVERB",
    "narrates\tVERB", "narrating\tVERB", "narrow\tVERB", "narrowed\tVERB", "narrowing\tVERB",
    "narrowly\tADV", "narrows\tVERB", "nation\tNOUN", "national\tADJ", "nationally\tADV",
    "nations\tNOUN", "nature\tNOUN", "natures\tNOUN", "nausea\tNOUN", "nauseas\tNOUN",
    "navigate\tVERB", "navigated\tVERB", "navigates\tVERB", "navigating\tVERB", "near\tADJ",
    "nearby\tADJ", "nearly\tADV", "necessary\tADJ", "need\tVERB", "needed\tVERB", "needing\tVERB",
    "needle\tNOUN", "needles\tNOUN", "needs\tVERB", "negative\tADJ", "negatively\tADV",
    "neglect\tVERB", "neglected\tVERB", "neglecting\tVERB", "neglects\tVERB", "negotiate\tVERB",
    "negotiated\tVERB", "negotiates\tVERB", "negotiating\tVERB", "nerve\tNOUN", "nerves\tNOUN",
    "nervous\tADJ", "nervously\tADV", "net\tNOUN", "nets\tNOUN", "network\tNOUN", "networks\tNOUN",
    "neural\tNOUN", "neurals\tNOUN", "neuron\tNOUN", "neurons\tNOUN", "neutral\tADJ",
    "neutrally\tADV", "neutron\tNOUN", "neutrons\tNOUN", "never\tADV", "new\tADJ", "news\tNOUN",
    "newses\tNOUN", "next\tADJ", "nextly\tADV", "night\tNOUN", "nights\tNOUN", "nine\tNUM",
    "nineteen\tNUM", "ninety\tNUM", "ninth\tNUM", "nobody\tPRON", "noisy\tADJ", "none\tPRON",
    "nonstandard\tADJ", "nonstandardly\tADV", "noodle\tNOUN", "noodles\tNOUN", "noone\tPRON",
    "normal\tADJ", "normalize\tVERB", "normalized\tVERB", "normalizes\tVERB", "normalizing\tVERB",
    "normally\tADV", "north\tNOUN", "norths\tNOUN", "notable\tADJ", "notably\tADV", "note\tVERB",
    "noted\tVERB", "notes\tVERB", "notice\tVERB", "noticed\tVERB", "notices\tVERB",
    "noticing\tVERB", "noting\tVERB", "now\tADV", "nowhere\tADV", "nucleus\tNOUN",
    "nucleuses\tNOUN", "number\tNOUN", "numbers\tNOUN", "numeracies\tNOUN", "numeracy\tNOUN",
    "nurse\tNOUN", "nurses\tNOUN", "nutrition\tNOUN", "nutritions\tNOUN", "oat\tNOUN", "oats\tNOUN",
    "obey\tVERB", "obeyed\tVERB", "obeying\tVERB", "obeys\tVERB", "observe\tVERB", "observed\tVERB",
    "observes\tVERB", "observing\tVERB", "occasional\tADJ", "occasionally\tADV", "occurrence\tNOUN",
    "occurrences\tNOUN", "ocean\tNOUN", "oceans\tNOUN", "octopus\tNOUN", "octopuses\tNOUN",
    "offer\tVERB", "offerred\tVERB", "offerring\tVERB", "offers\tVERB", "office\tNOUN",
    "offices\tNOUN", "official\tNOUN", "officially\tADV", "officials\tNOUN", "offline\tADJ",
    "offlinely\tADV", "often\tADV", "oil\tNOUN", "oils\tNOUN", "ointment\tNOUN", "ointments\tNOUN",
    "old\tADJ", "one\tPRON", "oneself\tPRON", "onion\tNOUN", "onions\tNOUN", "online\tADJ",
    "onlinely\tADV", "only\tADV", "open\tVERB", "openly\tADV", "openned\tVERB", "openning\tVERB",
    "opens\tVERB", "operate\tVERB", "operated\tVERB", "operates\tVERB", "operating\tVERB",
    "operation\tNOUN", "operations\tNOUN", "opinion\tNOUN", "opinions\tNOUN", "opportunities\tNOUN",
    "opportunity\tNOUN", "oppose\tVERB", "opposed\tVERB", "opposes\tVERB", "opposing\tVERB",
    "optimism\tNOUN", "optimisms\tNOUN", "optimistic\tADJ", "optimize\tVERB", "optimized\tVERB",
    "optimizes\tVERB", "optimizing\tVERB", "optional\tADJ", "optionally\tADV", "orange\tNOUN",
    "oranges\tNOUN", "order\tNOUN", "orders\tNOUN", "ordinary\tADJ", "organ\tNOUN",
    "organism\tNOUN", "organisms\tNOUN", "organize\tVERB", "organized\tVERB", "organizes\tVERB",
    "organizing\tVERB", "organs\tNOUN", "other\tADJ", "otherly\tADV", "others\tNOUN",
    "otherses\tNOUN", "our\tPRON", "ours\tPRON", "ourselves\tPRON", "outbreak\tNOUN",
    "outbreaks\tNOUN", "outdoors\tADV", "outraged\tADJ", "overcome\tVERB", "overcomed\tVERB",
    "overcomes\tVERB", "overcoming\tVERB", "overlook\tVERB", "overlooked\tVERB",
    "overlooking\tVERB", "overlooks\tVERB", "owe\tVERB", "owed\tVERB", "owes\tVERB", "owing\tVERB",
    "owl\tNOUN", "owls\tNOUN", "own\tADJ", "oyster\tNOUN", "oysters\tNOUN", "pack\tVERB",
    "packed\tVERB", "packing\tVERB", "packs\tVERB", "paint\tVERB", "painted\tVERB",
    "painting\tVERB", "paintings\tNOUN", "paints\tVERB", "pan\tNOUN", "pandemic\tNOUN",
    "pandemics\tNOUN", "panic\tNOUN", "panicked\tADJ", "panics\tNOUN", "pans\tNOUN", "paper\tNOUN",
    "papers\tNOUN", "paradox\tNOUN", "paradoxes\tNOUN", "paragraph\tNOUN", "paragraphs\tNOUN",
    "paramedic\tNOUN", "paramedics\tNOUN", "parameter\tNOUN", "parameters\tNOUN", "parent\tNOUN",
    "parents\tNOUN", "parliament\tNOUN", "parliaments\tNOUN", "parrot\tNOUN", "parrots\tNOUN",
    "part\tNOUN", "particle\tNOUN", "particles\tNOUN", "parties\tNOUN", "partly\tADV",
    "parts\tNOUN", "party\tNOUN", "pass\tVERB", "passed\tVERB", "passes\tVERB", "passing\tVERB",
    "passport\tNOUN", "passports\tNOUN", "password\tNOUN", "passwords\tNOUN", "pasta\tNOUN",
    "pastas\tNOUN", "paste\tVERB", "pasted\tVERB", "pastes\tVERB", "pasting\tVERB", "pasture\tNOUN",
    "pastures\tNOUN", "patch\tVERB", "patched\tVERB", "patches\tVERB", "patching\tVERB",
    "pathogen\tNOUN", "pathogens\tNOUN", "patient\tNOUN", "patients\tNOUN", "pattern\tNOUN",
    "patterns\tNOUN", "pay\tVERB", "payed\tVERB", "paying\tVERB", "pays\tVERB", "pea\tNOUN",
    "peach\tNOUN", "peaches\tNOUN", "peak\tNOUN", "peaks\tNOUN", "pear\tNOUN", "pears\tNOUN",
    "peas\tNOUN", "peel\tVERB", "peeled\tVERB", "peeling\tVERB", "peels\tVERB", "penalties\tNOUN",
    "penalty\tNOUN", "penguin\tNOUN", "penguins\tNOUN", "pension\tNOUN", "pensions\tNOUN",
    "people\tNOUN", "peoples\tNOUN", "pepper\tNOUN", "peppers\tNOUN", "perceive\tVERB",
    "perceived\tVERB", "perceives\tVERB", "perceiving\tVERB", "percentage\tNOUN",
    "percentages\tNOUN", "perception\tNOUN", "perceptions\tNOUN", "perform\tVERB",
    "performed\tVERB", "performing\tVERB", "performs\tVERB", "perhaps\tADV", "perimeter\tNOUN",
    "perimeters\tNOUN", "period\tNOUN", "periods\tNOUN", "persevere\tVERB", "persevered\tVERB",
    "perseveres\tVERB", "persevering\tVERB", "persist\tVERB", "persisted\tVERB", "persisting\tVERB",
    "persists\tVERB", "person\tNOUN", "persons\tNOUN", "persuade\tVERB", "persuaded\tVERB",
    "persuades\tVERB", "persuading\tVERB", "pessimism\tNOUN", "pessimisms\tNOUN",
    "pessimistic\tADJ", "petition\tNOUN", "petitions\tNOUN", "pharmacies\tNOUN", "pharmacist\tNOUN",
    "pharmacists\tNOUN", "pharmacy\tNOUN", "phase\tNOUN", "phases\tNOUN", "phenomenon\tNOUN",
    "phenomenons\tNOUN", "phone\tNOUN", "phones\tNOUN", "photograph\tVERB", "photographed\tVERB",
    "photographing\tVERB", "photographs\tVERB", "photon\tNOUN", "photons\tNOUN", "physician\tNOUN",
    "physicians\tNOUN", "picture\tNOUN", "pictures\tNOUN", "piece\tNOUN", "pieces\tNOUN",
    "pig\tNOUN", "pigeon\tNOUN", "pigeons\tNOUN", "pigs\tNOUN", "pill\tNOUN", "pillow\tNOUN",
    "pillows\tNOUN", "pills\tNOUN", "pistol\tNOUN", "pistols\tNOUN", "pitch\tNOUN", "pitches\tNOUN",
    "pizza\tNOUN", "pizzas\tNOUN", "place\tNOUN", "places\tNOUN", "plan\tNOUN", "plane\tNOUN",
    "planes\tNOUN", "planet\tNOUN", "planets\tNOUN", "plans\tNOUN", "plant\tNOUN", "plants\tNOUN",
    "plastic\tNOUN", "plastics\tNOUN", "plate\tNOUN", "plates\tNOUN", "platform\tNOUN",
    "platforms\tNOUN", "plausible\tADJ", "plausibly\tADV", "play\tVERB", "played\tVERB",
    "player\tNOUN", "players\tNOUN", "playing\tVERB", "plays\tVERB", "pleased\tADJ", "pliers\tNOUN",
    "plierses\tNOUN", "plot\tNOUN", "plots\tNOUN", "plow\tNOUN", "plows\tNOUN", "plum\tNOUN",
    "plummet\tVERB", "plummeted\tVERB", "plummeting\tVERB", "plummets\tVERB", "plums\tNOUN",
    "podcast\tNOUN", "podcasts\tNOUN", "point\tNOUN", "points\tNOUN", "poisonous\tADJ",
    "poisonously\tADV", "polarize\tVERB", "polarized\tVERB", "polarizes\tVERB", "polarizing\tVERB",
    "police\tNOUN", "polices\tNOUN", "policies\tNOUN", "policy\tNOUN", "polish\tVERB",
    "polished\tVERB", "polishes\tVERB", "polishing\tVERB", "polite\tADJ", "politely\tADV",
    "political\tADJ", "politically\tADV", "politician\tNOUN", "politicians\tNOUN", "poll\tVERB",
    "polled\tVERB", "polling\tVERB", "polls\tVERB", "polluted\tADJ", "polygon\tNOUN",
    "polygons\tNOUN", "pool\tNOUN", "pools\tNOUN", "poor\tADJ", "poorly\tADV", "porch\tNOUN",
    "porches\tNOUN", "portfolio\tNOUN", "portfolios\tNOUN", "portray\tVERB", "portrayed\tVERB",
    "portraying\tVERB", "portrays\tVERB", "position\tNOUN", "positions\tNOUN", "positive\tADJ",
    "positively\tADV", "possible\tADJ", "possibly\tADV", "post\tVERB", "posted\tVERB",
    "poster\tNOUN", "posters\tNOUN", "posting\tVERB", "postpone\tVERB", "postponed\tVERB",
    "postpones\tVERB", "postponing\tVERB", "posts\tVERB", "pot\tNOUN", "potato\tNOUN",
    "potatoes\tNOUN", "pots\tNOUN", "pour\tVERB", "poured\tVERB", "pouring\tVERB", "pours\tVERB",
    "power\tNOUN", "powers\tNOUN", "practice\tVERB", "practiced\tVERB", "practices\tVERB",
    "practicing\tVERB", "praise\tVERB", "praised\tVERB", "praises\tVERB", "praising\tVERB",
    "preach\tVERB", "preached\tVERB", "preaches\tVERB", "preaching\tVERB", "precision\tNOUN",
    "precisions\tNOUN", "predict\tVERB", "predicted\tVERB", "predicting\tVERB", "predicts\tVERB",
    "prefer\tVERB", "preferred\tVERB", "preferring\tVERB", "prefers\tVERB", "prejudice\tNOUN",
    "prejudices\tNOUN", "premise\tNOUN", "premises\tNOUN", "premium\tNOUN", "premiums\tNOUN",
    "prepared\tADJ", "prescription\tNOUN", "prescriptions\tNOUN", "present\tADJ",
    "presentation\tNOUN", "presentations\tNOUN", "presently\tADV", "president\tNOUN",
    "presidents\tNOUN", "press\tVERB", "pressed\tVERB", "presses\tVERB", "pressing\tVERB",
    "pressure\tNOUN", "pressures\tNOUN", "presume\tVERB", "presumed\tVERB", "presumes\tVERB",
    "presuming\tVERB", "prevent\tVERB", "prevented\tVERB", "preventing\tVERB", "prevents\tVERB",
    "price\tVERB", "priced\tVERB", "priceless\tADJ", "pricelessly\tADV", "prices\tVERB",
    "pricing\tVERB", "print\tVERB", "printed\tVERB", "printer\tNOUN", "printers\tNOUN",
    "printing\tVERB", "prints\tVERB", "prize\tNOUN", "prizes\tNOUN", "probable\tADJ",
    "probably\tADV", "problem\tNOUN", "problems\tNOUN", "procedure\tNOUN", "procedures\tNOUN",
    "process\tVERB", "processed\tVERB", "processes\tVERB", "processing\tVERB", "produce\tVERB",
    "produced\tVERB", "produces\tVERB", "producing\tVERB", "product\tNOUN", "products\tNOUN",
    "profile\tNOUN", "profiles\tNOUN", "profit\tNOUN", "profits\tNOUN", "prognosis\tNOUN",
    "prognosises\tNOUN", "program\tVERB", "programed\tVERB", "programing\tVERB", "programs\tVERB",
    "progressive\tADJ", "progressively\tADV", "prohibit\tVERB", "prohibited\tVERB",
    "prohibiting\tVERB", "prohibits\tVERB", "project\tNOUN", "projects\tNOUN", "promote\tVERB",
    "promoted\tVERB", "promotes\tVERB", "promoting\tVERB", "proof\tNOUN", "proofs\tNOUN",
    "propaganda\tNOUN", "propagandas\tNOUN", "proportion\tNOUN", "proportions\tNOUN",
    "prosper\tVERB", "prospered\tVERB", "prospering\tVERB", "prospers\tVERB", "protect\tVERB",
    "protected\tVERB", "protecting\tVERB", "protects\tVERB", "protein\tNOUN", "proteins\tNOUN",
    "protest\tVERB", "protested\tVERB", "protesting\tVERB", "protests\tVERB", "protocol\tNOUN",
    "protocols\tNOUN", "proton\tNOUN", "protons\tNOUN", "proud\tADJ", "proudly\tADV", "prove\tVERB",
    "proved\tVERB", "proves\tVERB", "provide\tVERB", "provided\tVERB", "provides\tVERB",
    "providing\tVERB", "proving\tVERB", "prudent\tADJ", "prudently\tADV", "public\tADJ",
    "publish\tVERB", "published\tVERB", "publishes\tVERB", "publishing\tVERB", "pull\tVERB",
    "pulled\tVERB", "pulling\tVERB", "pulls\tVERB", "pundit\tNOUN", "pundits\tNOUN",
    "purchase\tNOUN", "purchases\tNOUN", "pure\tADJ", "purely\tADV", "purified\tVERB",
    "purifies\tVERB", "purify\tVERB", "purifying\tVERB", "purse\tNOUN", "purses\tNOUN",
    "push\tVERB", "pushed\tVERB", "pushes\tVERB", "pushing\tVERB", "put\tVERB", "puts\tVERB",
    "putted\tVERB", "putting\tVERB", "puzzle\tNOUN", "puzzles\tNOUN", "pyramid\tNOUN",
    "pyramids\tNOUN", "qualified\tVERB", "qualifies\tVERB", "qualify\tVERB", "qualifying\tVERB",
    "quantities\tNOUN", "quantity\tNOUN", "quarantine\tVERB", "quarantined\tVERB",
    "quarantines\tVERB", "quarantining\tVERB", "quarter\tNUM", "quartz\tNOUN", "quartzes\tNOUN",
    "question\tVERB", "questioned\tVERB", "questioning\tVERB", "questions\tVERB", "quick\tADJ",
    "quickly\tADV", "quiet\tADJ", "quietly\tADV", "quit\tVERB", "quite\tADV", "quited\tVERB",
    "quiting\tVERB", "quits\tVERB", "quote\tVERB", "quoted\tVERB", "quotes\tVERB", "quoting\tVERB",
    "rabbit\tNOUN", "rabbits\tNOUN", "race\tNOUN", "races\tNOUN", "racket\tNOUN", "rackets\tNOUN",
    "radiate\tVERB", "radiated\tVERB", "radiates\tVERB", "radiating\tVERB", "radiation\tNOUN",
    "radiations\tNOUN", "radical\tADJ", "radically\tADV", "radius\tNOUN", "radiuses\tNOUN",
    "rainy\tADJ", "raise\tVERB", "raised\tVERB", "raises\tVERB", "raising\tVERB", "rake\tNOUN",
    "rakes\tNOUN", "rallied\tVERB", "rallies\tVERB", "rally\tVERB", "rallying\tVERB",
    "rampant\tADJ", "rampantly\tADV", "range\tNOUN", "ranges\tNOUN", "rapid\tADJ", "rapidly\tADV",
    "rare\tADJ", "rarely\tADV", "rash\tNOUN", "rashes\tNOUN", "rat\tNOUN", "rate\tNOUN",
    "rates\tNOUN", "rather\tADV", "rating\tNOUN", "ratings\tNOUN", "ratio\tNOUN", "ratios\tNOUN",
    "rats\tNOUN", "razor\tNOUN", "razors\tNOUN", "reach\tVERB", "reached\tVERB", "reaches\tVERB",
    "reaching\tVERB", "reaction\tNOUN", "reactions\tNOUN", "read\tVERB", "readed\tVERB",
    "reading\tVERB", "reads\tVERB", "ready\tADJ", "real\tNOUN", "realize\tVERB", "realized\tVERB",
    "realizes\tVERB", "realizing\tVERB", "really\tADV", "reals\tNOUN", "reason\tNOUN",
    "reasoning\tNOUN", "reasonings\tNOUN", "reasons\tNOUN", "reboot\tVERB", "rebooted\tVERB",
    "rebooting\tVERB", "reboots\tVERB", "rebound\tVERB", "rebounded\tVERB", "rebounding\tVERB",
    "rebounds\tVERB", "recall\tVERB", "recalled\tVERB", "recalling\tVERB", "recalls\tVERB",
    "receipt\tNOUN", "receipts\tNOUN", "receive\tVERB", "received\tVERB", "receives\tVERB",
    "receiving\tVERB", "recent\tADJ", "recently\tADV", "receptor\tNOUN", "receptors\tNOUN",
    "recession\tNOUN", "recessions\tNOUN", "recipe\tNOUN", "recipes\tNOUN", "recipient\tNOUN",
    "recipients\tNOUN", "reckless\tADJ", "recklessly\tADV", "recognize\tVERB", "recognized\tVERB",
    "recognizes\tVERB", "recognizing\tVERB", "recommend\tVERB", "recommended\tVERB",
    "recommending\tVERB", "recommends\tVERB", "record\tVERB", "recorded\tVERB", "recording\tVERB",
    "records\tVERB", "recover\tVERB", "recovered\tVERB", "recoveries\tNOUN", "recovering\tVERB",
    "recovers\tVERB", "recovery\tNOUN", "recruit\tVERB", "recruited\tVERB", "recruiting\tVERB",
    "recruits\tVERB", "reduce\tVERB", "reduced\tVERB", "reduces\tVERB", "reducing\tVERB",
    "referee\tNOUN", "referees\tNOUN", "reference\tVERB", "referenced\tVERB", "references\tVERB",
    "referencing\tVERB", "reflect\tVERB", "reflected\tVERB", "reflecting\tVERB", "reflects\tVERB",
    "reflex\tNOUN", "reflexes\tNOUN", "refract\tVERB", "refracted\tVERB", "refracting\tVERB",
    "refracts\tVERB", "refund\tNOUN", "refunds\tNOUN", "regional\tADJ", "regionally\tADV",
    "register\tVERB", "registered\tVERB", "registering\tVERB", "registers\tVERB", "regret\tVERB",
    "regrets\tVERB", "regretted\tVERB", "regretting\tVERB", "regular\tADJ", "regularly\tADV",
    "regulation\tNOUN", "regulations\tNOUN", "regulator\tNOUN", "regulators\tNOUN",
    "rehearse\tVERB", "rehearsed\tVERB", "rehearses\tVERB", "rehearsing\tVERB", "reject\tVERB",
    "rejected\tVERB", "rejecting\tVERB", "rejects\tVERB", "relapse\tNOUN", "relapses\tNOUN",
    "relate\tVERB", "related\tVERB", "relates\tVERB", "relating\tVERB", "relationship\tNOUN",
    "relationships\tNOUN", "release\tVERB", "released\tVERB", "releases\tVERB", "releasing\tVERB",
    "reliable\tADJ", "reliably\tADV", "relocate\tVERB", "relocated\tVERB", "relocates\tVERB",
    "relocating\tVERB", "reluctant\tADJ", "reluctantly\tADV", "remain\tVERB", "remained\tVERB",
    "remaining\tVERB", "remains\tVERB", "remarkable\tADJ", "remarkably\tADV", "remedies\tNOUN",
    "remedy\tNOUN", "remember\tVERB", "remembered\tVERB", "remembering\tVERB", "remembers\tVERB",
    "remind\tVERB", "reminded\tVERB", "reminding\tVERB", "reminds\tVERB", "remote\tADJ",
    "remotely\tADV", "remove\tVERB", "removed\tVERB", "removes\tVERB", "removing\tVERB",
    "repair\tVERB", "repaired\tVERB", "repairing\tVERB", "repairs\tVERB", "replace\tVERB",
    "replaced\tVERB", "replaces\tVERB", "replacing\tVERB", "replied\tVERB", "replies\tVERB",
    "reply\tVERB", "replying\tVERB", "report\tVERB", "reported\tVERB", "reporter\tNOUN",
    "reporters\tNOUN", "reporting\tVERB", "reports\tVERB", "require\tVERB", "required\tVERB",
    "requires\tVERB", "requiring\tVERB", "research\tVERB", "researched\tVERB", "researcher\tNOUN",
    "researchers\tNOUN", "researches\tVERB", "researching\tVERB", "reservation\tNOUN",
    "reservations\tNOUN", "resign\tVERB", "resigned\tVERB", "resigning\tVERB", "resigns\tVERB",
    "resist\tVERB", "resisted\tVERB", "resisting\tVERB", "resists\tVERB", "resolve\tVERB",
    "resolved\tVERB", "resolves\tVERB", "resolving\tVERB", "resort\tNOUN", "resorts\tNOUN",
    "respectful\tADJ", "respectfully\tADV", "respirator\tNOUN", "respirators\tNOUN",
    "responsible\tADJ", "responsibly\tADV", "restart\tVERB", "restarted\tVERB", "restarting\tVERB",
    "restarts\tVERB", "restrict\tVERB", "restricted\tVERB", "restricting\tVERB",
    "restriction\tNOUN", "restrictions\tNOUN", "restricts\tVERB", "result\tNOUN", "results\tNOUN",
    "resume\tVERB", "resumed\tVERB", "resumes\tVERB", "resuming\tVERB", "retire\tVERB",
    "retired\tVERB", "retires\tVERB", "retiring\tVERB", "retraction\tNOUN", "retractions\tNOUN",
    "retrieve\tVERB", "retrieved\tVERB", "retrieves\tVERB", "retrieving\tVERB", "return\tVERB",
    "returned\tVERB", "returning\tVERB", "returns\tVERB", "retweet\tVERB", "retweeted\tVERB",
    "retweeting\tVERB", "retweets\tVERB", "reveal\tVERB", "revealed\tVERB", "revealing\tVERB",
    "reveals\tVERB", "revenue\tNOUN", "revenues\tNOUN", "review\tVERB", "reviewed\tVERB",
    "reviewing\tVERB", "reviews\tVERB", "rib\tNOUN", "ribs\tNOUN", "rice\tNOUN", "rices\tNOUN",
    "rich\tADJ", "richly\tADV", "riddle\tNOUN", "riddles\tNOUN", "ride\tVERB", "rided\tVERB",
    "rides\tVERB", "riding\tVERB", "rifle\tNOUN", "rifles\tNOUN", "right\tNOUN", "rightly\tADV",
    "rights\tNOUN", "rinse\tVERB", "rinsed\tVERB", "rinses\tVERB", "rinsing\tVERB", "rise\tVERB",
    "rised\tVERB", "rises\tVERB", "rising\tVERB", "risk\tVERB", "risked\tVERB", "risking\tVERB",
    "risks\tVERB", "risky\tADJ", "river\tNOUN", "rivers\tNOUN", "road\tNOUN", "roads\tNOUN",
    "roast\tVERB", "roasted\tVERB", "roasting\tVERB", "roasts\tVERB", "rock\tNOUN", "rocks\tNOUN",
    "role\tNOUN", "roles\tNOUN", "roll\tVERB", "rolled\tVERB", "rolling\tVERB", "rolls\tVERB",
    "room\tNOUN", "rooms\tNOUN", "rooster\tNOUN", "roosters\tNOUN", "rope\tNOUN", "ropes\tNOUN",
    "roster\tNOUN", "rosters\tNOUN", "rough\tADJ", "roughly\tADV", "round\tVERB", "rounded\tVERB",
    "rounding\tVERB", "rounds\tVERB", "route\tNOUN", "router\tNOUN", "routers\tNOUN",
    "routes\tNOUN", "row\tNOUN", "rows\tNOUN", "rub\tVERB", "rubbed\tVERB", "rubber\tNOUN",
    "rubbers\tNOUN", "rubbing\tVERB", "rubs\tVERB", "rude\tADJ", "rudely\tADV", "rug\tNOUN",
    "rugs\tNOUN", "rule\tNOUN", "rules\tNOUN", "rumor\tNOUN", "rumors\tNOUN", "run\tVERB",
    "runned\tVERB", "running\tVERB", "runs\tVERB", "sad\tADJ", "safe\tADJ", "safely\tADV",
    "safeties\tNOUN", "safety\tNOUN", "salad\tNOUN", "salads\tNOUN", "salaries\tNOUN",
    "salary\tNOUN", "sale\tNOUN", "sales\tNOUN", "salt\tNOUN", "salts\tNOUN", "same\tADJ",
    "samely\tADV", "sample\tVERB", "sampled\tVERB", "samples\tVERB", "sampling\tVERB", "sand\tNOUN",
    "sands\tNOUN", "sandwich\tNOUN", "sandwiches\tNOUN", "sanitary\tADJ", "sanitation\tNOUN",
    "sanitations\tNOUN", "sanitize\tVERB", "sanitized\tVERB", "sanitizer\tNOUN", "sanitizers\tNOUN",
    "sanitizes\tVERB", "sanitizing\tVERB", "satellite\tNOUN", "satellites\tNOUN", "satisfied\tADJ",
    "save\tVERB", "saved\tVERB", "saves\tVERB", "saving\tVERB", "savings\tNOUN", "saw\tNOUN",
    "saws\tNOUN", "say\tVERB", "sayed\tVERB", "saying\tVERB", "says\tVERB", "scalar\tNOUN",
    "scalars\tNOUN", "scale\tVERB", "scaled\tVERB", "scales\tVERB", "scaling\tVERB", "scam\tNOUN",
    "scams\tNOUN", "scan\tNOUN", "scanner\tNOUN", "scanners\tNOUN", "scans\tNOUN", "scar\tNOUN",
    "scarcely\tADV", "scared\tADJ", "scars\tNOUN", "scene\tNOUN", "scenes\tNOUN", "school\tNOUN",
    "schools\tNOUN", "scientific\tADJ", "scientist\tNOUN", "scientists\tNOUN", "scissors\tNOUN",
    "scissorses\tNOUN", "score\tNOUN", "scores\tNOUN", "scratch\tVERB", "scratched\tVERB",
    "scratches\tVERB", "scratching\tVERB", "screen\tNOUN", "screening\tNOUN", "screenings\tNOUN",
    "screens\tNOUN", "screw\tNOUN", "screws\tNOUN", "script\tNOUN", "scripts\tNOUN", "scroll\tVERB",
    "scrolled\tVERB", "scrolling\tVERB", "scrolls\tVERB", "scrub\tVERB", "scrubed\tVERB",
    "scrubing\tVERB", "scrubs\tVERB", "sculpt\tVERB", "sculpted\tVERB", "sculpting\tVERB",
    "sculpts\tVERB", "sea\tNOUN", "seal\tVERB", "sealed\tVERB", "sealing\tVERB", "seals\tVERB",
    "search\tVERB", "searched\tVERB", "searches\tVERB", "searching\tVERB", "seas\tNOUN",
    "season\tNOUN", "seasons\tNOUN", "second\tNUM", "secret\tNOUN", "secrets\tNOUN", "secure\tVERB",
    "secured\tVERB", "secures\tVERB", "securing\tVERB", "securities\tNOUN", "security\tNOUN",
    "see\tVERB", "seed\tVERB", "seeds\tNOUN", "seeing\tVERB", "seem\tVERB", "seemed\tVERB",
    "seeming\tVERB", "seems\tVERB", "sees\tVERB", "seizure\tNOUN", "seizures\tNOUN", "seldom\tADV",
    "selfish\tADJ", "selfishly\tADV", "sell\tVERB", "selled\tVERB", "selling\tVERB", "sells\tVERB",
    "senate\tNOUN", "senates\tNOUN", "senator\tNOUN", "senators\tNOUN", "send\tVERB",
    "sended\tVERB", "sending\tVERB", "sends\tVERB", "sense\tVERB", "sensed\tVERB", "senses\tVERB",
    "sensing\tVERB", "sentence\tNOUN", "sentences\tNOUN", "sentiment\tNOUN", "sentiments\tNOUN",
    "serve\tVERB", "served\tVERB", "server\tNOUN", "servers\tNOUN", "serves\tVERB", "service\tNOUN",
    "services\tNOUN", "serving\tVERB", "set\tVERB", "sets\tVERB", "setted\tVERB", "setting\tVERB",
    "settle\tVERB", "settled\tVERB", "settles\tVERB", "settling\tVERB", "seven\tNUM",
    "seventeen\tNUM", "seventh\tNUM", "seventy\tNUM", "severe\tADJ", "severely\tADV",
    "shallow\tADJ", "shallowly\tADV", "shampoo\tNOUN", "shampoos\tNOUN", "share\tVERB",
    "shared\tVERB", "shareholder\tNOUN", "shareholders\tNOUN", "shares\tVERB", "sharing\tVERB",
    "shark\tNOUN", "sharks\tNOUN", "she\tPRON", "sheep\tNOUN", "sheeps\tNOUN", "sheet\tNOUN",
    "sheets\tNOUN", "shelf\tNOUN", "shelfs\tNOUN", "shield\tNOUN", "shields\tNOUN", "ship\tVERB",
    "shipped\tVERB", "shipping\tVERB", "ships\tVERB", "shoot\tVERB", "shooted\tVERB",
    "shooting\tVERB", "shoots\tVERB", "short\tADJ", "shortage\tNOUN", "shortages\tNOUN",
    "shortly\tADV", "shot\tNOUN", "shots\tNOUN", "shoulder\tNOUN", "shoulders\tNOUN",
    "shovel\tNOUN", "shovels\tNOUN", "show\tVERB", "showed\tVERB", "showing\tVERB", "shows\tVERB",
    "shrimp\tNOUN", "shrimps\tNOUN", "shutdown\tVERB", "shutdowned\tVERB", "shutdowning\tVERB",
    "shutdowns\tVERB", "sick\tADJ", "sickly\tADV", "side\tNOUN", "sides\tNOUN", "sign\tVERB",
    "signal\tVERB", "signaled\tVERB", "signaling\tVERB", "signals\tVERB", "signed\tVERB",
    "significant\tADJ", "significantly\tADV", "signing\tVERB", "signs\tVERB", "silent\tADJ",
    "silently\tADV", "simmer\tVERB", "simmered\tVERB", "simmering\tVERB", "simmers\tVERB",
    "simulate\tVERB", "simulated\tVERB", "simulates\tVERB", "simulating\tVERB", "sing\tVERB",
    "singed\tVERB", "singing\tVERB", "sings\tVERB", "sit\tVERB", "site\tNOUN", "sites\tNOUN",
    "sits\tVERB", "sitted\tVERB", "sitting\tVERB", "situation\tNOUN", "situations\tNOUN",
    "six\tNUM", "sixteen\tNUM", "sixth\tNUM", "sixty\tNUM", "skeptical\tADJ", "skeptically\tADV",
    "skin\tNOUN", "skins\tNOUN", "skull\tNOUN", "skulls\tNOUN", "slice\tVERB", "sliced\tVERB",
    "slices\tVERB", "slicing\tVERB", "slide\tVERB", "slided\tVERB", "slides\tVERB", "sliding\tVERB",
    "slow\tVERB", "slowed\tVERB", "slowing\tVERB", "slowly\tADV", "slows\tVERB", "small\tADJ",
    "smally\tADV", "smart\tADJ", "smartly\tADV", "smartphone\tNOUN", "smartphones\tNOUN",
    "smell\tVERB", "smelled\tVERB", "smelling\tVERB", "smells\tVERB", "smoke\tNOUN", "smokes\tNOUN",
    "smooth\tADJ", "smoothly\tADV", "snack\tNOUN", "snacks\tNOUN", "snail\tNOUN", "snails\tNOUN",
    "sneeze\tVERB", "sneezed\tVERB", "sneezes\tVERB", "sneezing\tVERB", "snowy\tADJ", "soak\tVERB",
    "soaked\tVERB", "soaking\tVERB", "soaks\tVERB", "soap\tNOUN", "soaps\tNOUN", "soar\tVERB",
    "soared\tVERB", "soaring\tVERB", "soars\tVERB", "social\tADJ", "socially\tADV",
    "societies\tNOUN", "society\tNOUN", "socket\tNOUN", "sockets\tNOUN", "sofa\tNOUN",
    "sofas\tNOUN", "soft\tADJ", "softly\tADV", "soil\tNOUN", "soils\tNOUN", "solid\tADJ",
    "solidly\tADV", "solution\tNOUN", "solutions\tNOUN", "solve\tVERB", "solved\tVERB",
    "solves\tVERB", "solving\tVERB", "somebody\tPRON", "someone\tPRON", "something\tPRON",
    "sometimes\tADV", "somewhere\tADV", "son\tNOUN", "sons\tNOUN", "soon\tADV", "sort\tVERB",
    "sorted\tVERB", "sorting\tVERB", "sorts\tVERB", "soup\tNOUN", "soups\tNOUN", "source\tNOUN",
    "sources\tNOUN", "space\tNOUN", "spaces\tNOUN", "spark\tNOUN", "sparks\tNOUN", "sparrow\tNOUN",
    "sparrows\tNOUN", "sparse\tADJ", "sparsely\tADV", "speak\tVERB", "speaked\tVERB",
    "speaker\tNOUN", "speakers\tNOUN", "speaking\tVERB", "speaks\tVERB", "spear\tNOUN",
    "spears\tNOUN", "special\tADJ", "specialist\tNOUN", "specialists\tNOUN", "specially\tADV",
    "species\tNOUN", "specieses\tNOUN", "specimen\tNOUN", "specimens\tNOUN", "spectator\tNOUN",
    "spectators\tNOUN", "spectrum\tNOUN", "spectrums\tNOUN", "speech\tNOUN", "speeches\tNOUN",
    "speed\tNOUN", "speeds\tNOUN", "spend\tVERB", "spended\tVERB", "spending\tVERB", "spends\tVERB",
    "sphere\tNOUN", "spheres\tNOUN", "spice\tNOUN", "spices\tNOUN", "spider\tNOUN", "spiders\tNOUN",
    "spike\tVERB", "spiked\tVERB", "spikes\tVERB", "spiking\tVERB", "spin\tVERB", "spinach\tNOUN",
    "spinaches\tNOUN", "spine\tNOUN", "spines\tNOUN", "spinned\tVERB", "spinning\tVERB",
    "spins\tVERB", "splint\tNOUN", "splints\tNOUN", "spokesperson\tNOUN", "spokespersons\tNOUN",
    "spoon\tNOUN", "spoons\tNOUN", "sport\tNOUN", "sports\tNOUN", "sprain\tNOUN", "sprains\tNOUN",
    "spread\tVERB", "spreaded\tVERB", "spreading\tVERB", "spreads\tVERB", "spreadsheet\tNOUN",
    "spreadsheets\tNOUN", "spring\tNOUN", "springs\tNOUN", "sprint\tNOUN", "sprints\tNOUN",
    "squad\tNOUN", "squads\tNOUN", "square\tNOUN", "squares\tNOUN", "squeeze\tVERB",
    "squeezed\tVERB", "squeezes\tVERB", "squeezing\tVERB", "squirrel\tNOUN", "squirrels\tNOUN",
    "stabilize\tVERB", "stabilized\tVERB", "stabilizes\tVERB", "stabilizing\tVERB", "stable\tNOUN",
    "stables\tNOUN", "stably\tADV", "stack\tVERB", "stacked\tVERB", "stacking\tVERB",
    "stacks\tVERB", "stadium\tNOUN", "stadiums\tNOUN", "staff\tNOUN", "staffs\tNOUN", "stage\tNOUN",
    "stages\tNOUN", "stale\tADJ", "staly\tADV", "stamp\tVERB", "stamped\tVERB", "stamping\tVERB",
    "stamps\tVERB", "stand\tVERB", "standard\tADJ", "standardly\tADV", "standed\tVERB",
    "standing\tVERB", "stands\tVERB", "star\tNOUN", "stars\tNOUN", "start\tVERB", "started\tVERB",
    "starting\tVERB", "starts\tVERB", "startup\tNOUN", "startups\tNOUN", "state\tVERB",
    "stated\tVERB", "statement\tNOUN", "statements\tNOUN", "states\tVERB", "stating\tVERB",
    "station\tNOUN", "stations\tNOUN", "statistic\tNOUN", "statistics\tNOUN", "stay\tVERB",
    "stayed\tVERB", "staying\tVERB", "stays\tVERB", "steady\tADJ", "steam\tVERB", "steamed\tVERB",
    "steaming\tVERB", "steams\tVERB", "stereotype\tNOUN", "stereotypes\tNOUN", "sterile\tADJ",
    "sterily\tADV", "stigma\tNOUN", "stigmas\tNOUN", "still\tADV", "stingy\tADJ", "stir\tVERB",
    "stirred\tVERB", "stirring\tVERB", "stirs\tVERB", "stock\tNOUN", "stockholder\tNOUN",
    "stockholders\tNOUN", "stocks\tNOUN", "stomach\tNOUN", "stomaches\tNOUN", "stone\tNOUN",
    "stones\tNOUN", "stool\tNOUN", "stools\tNOUN", "stop\tVERB", "stopped\tVERB", "stopping\tVERB",
    "stops\tVERB", "store\tVERB", "stored\tVERB", "stores\tVERB", "stories\tNOUN", "storing\tVERB",
    "storm\tNOUN", "storms\tNOUN", "stormy\tADJ", "story\tNOUN", "strain\tNOUN", "strains\tNOUN",
    "strategies\tNOUN", "strategy\tNOUN", "stream\tVERB", "streamed\tVERB", "streaming\tVERB",
    "streams\tVERB", "street\tNOUN", "streets\tNOUN", "stress\tVERB", "stressed\tVERB",
    "stresses\tVERB", "stressing\tVERB", "stretch\tVERB", "stretched\tVERB", "stretcher\tNOUN",
    "stretchers\tNOUN", "stretches\tVERB", "stretching\tVERB", "strive\tVERB", "strived\tVERB",
    "strives\tVERB", "striving\tVERB", "stroke\tNOUN", "strokes\tNOUN", "strong\tADJ",
    "strongly\tADV", "struggle\tVERB", "struggled\tVERB", "struggles\tVERB", "struggling\tVERB",
    "student\tNOUN", "students\tNOUN", "studied\tVERB", "studies\tVERB", "study\tVERB",
    "studying\tVERB", "stupid\tADJ", "stupidly\tADV", "subscribe\tVERB", "subscribed\tVERB",
    "subscribes\tVERB", "subscribing\tVERB", "subsidize\tVERB", "subsidized\tVERB",
    "subsidizes\tVERB", "subsidizing\tVERB", "substance\tNOUN", "substances\tNOUN",
    "substantial\tADJ", "substantially\tADV", "substitute\tVERB", "substituted\tVERB",
    "substitutes\tVERB", "substituting\tVERB", "subtract\tVERB", "subtracted\tVERB",
    "subtracting\tVERB", "subtracts\tVERB", "subway\tNOUN", "subways\tNOUN", "succeed\tVERB",
    "succeeded\tVERB", "succeeding\tVERB", "succeeds\tVERB", "sudden\tADJ", "suddenly\tADV",
    "suffer\tVERB", "sufferred\tVERB", "sufferring\tVERB", "suffers\tVERB", "sugar\tNOUN",
    "sugars\tNOUN", "suggest\tVERB", "suggested\tVERB", "suggesting\tVERB", "suggests\tVERB",
    "suitcase\tNOUN", "suitcases\tNOUN", "suite\tNOUN", "suites\tNOUN", "sum\tNOUN",
    "summarize\tVERB", "summarized\tVERB", "summarizes\tVERB", "summarizing\tVERB", "summer\tNOUN",
    "summers\tNOUN", "sums\tNOUN", "sunny\tADJ", "supper\tNOUN", "suppers\tNOUN", "supplies\tNOUN",
    "supply\tNOUN", "support\tVERB", "supported\tVERB", "supporting\tVERB", "supports\tVERB",
    "suppose\tVERB", "supposed\tVERB", "supposes\tVERB", "supposing\tVERB", "sure\tADJ",
    "surely\tADV", "surge\tVERB", "surged\tVERB", "surgeries\tNOUN", "surgery\tNOUN",
    "surges\tVERB", "surging\tVERB", "surplus\tNOUN", "surpluses\tNOUN", "surrender\tVERB",
    "surrendered\tVERB", "surrendering\tVERB", "surrenders\tVERB", "surrounding\tNOUN",
    "surroundings\tNOUN", "survey\tVERB", "surveyed\tVERB", "surveying\tVERB", "surveys\tVERB",
    "survive\tVERB", "survived\tVERB", "survives\tVERB", "surviving\tVERB", "susceptible\tADJ",
    "susceptibly\tADV", "suspend\tVERB", "suspended\tVERB", "suspending\tVERB", "suspends\tVERB",
    "swap\tVERB", "swapped\tVERB", "swapping\tVERB", "swaps\tVERB", "sweep\tVERB", "sweeped\tVERB",
    "sweeping\tVERB", "sweeps\tVERB", "swelling\tNOUN", "swellings\tNOUN", "switch\tVERB",
    "switched\tVERB", "switches\tVERB", "switching\tVERB", "sword\tNOUN", "swords\tNOUN",
    "symptom\tNOUN", "symptomatic\tADJ", "symptoms\tNOUN", "synapse\tNOUN", "synapses\tNOUN",
    "syntax\tNOUN", "syntaxes\tNOUN", "syringe\tNOUN", "syringes\tNOUN", "table\tNOUN",
    "tables\tNOUN", "tablet\tNOUN", "tablets\tNOUN", "tackle\tVERB", "tackled\tVERB",
    "tackles\tVERB", "tackling\tVERB", "tag\tVERB", "tagged\tVERB", "tagging\tVERB", "tags\tVERB",
    "take\tVERB", "taked\tVERB", "takes\tVERB", "taking\tVERB", "talk\tVERB", "talked\tVERB",
    "talking\tVERB", "talks\tVERB", "tall\tADJ", "tally\tADV", "target\tNOUN", "targets\tNOUN",
    "tariff\tNOUN", "tariffs\tNOUN", "taste\tNOUN", "tastes\tNOUN", "tax\tVERB", "taxed\tVERB",
    "taxes\tVERB", "taxi\tNOUN", "taxing\tVERB", "taxis\tNOUN", "tea\tNOUN", "teach\tVERB",
    "teached\tVERB", "teacher\tNOUN", "teachers\tNOUN", "teaches\tVERB", "teaching\tVERB",
    "team\tNOUN", "teams\tNOUN", "teas\tNOUN", "technologies\tNOUN", "technology\tNOUN",
    "tell\tVERB", "telled\tVERB", "telling\tVERB", "tells\tVERB", "temperature\tNOUN",
    "temperatures\tNOUN", "ten\tNUM", "tensor\tNOUN", "tensors\tNOUN", "tenth\tNUM",
    "terminal\tNOUN", "terminals\tNOUN", "terrified\tADJ", "test\tVERB", "tested\tVERB",
    "testing\tVERB", "tests\tVERB", "text\tNOUN", "texts\tNOUN", "thank\tVERB", "thanked\tVERB",
    "thankful\tADJ", "thankfully\tADV", "thanking\tVERB", "thanks\tVERB", "that\tPRON",
    "their\tPRON", "theirs\tPRON", "them\tPRON", "themselves\tPRON", "then\tADV", "theorem\tNOUN",
    "theorems\tNOUN", "theories\tNOUN", "theorize\tVERB", "theorized\tVERB", "theorizes\tVERB",
    "theorizing\tVERB", "theory\tNOUN", "therapies\tNOUN", "therapy\tNOUN", "there\tADV",
    "these\tPRON", "they\tPRON", "thick\tADJ", "thickly\tADV", "thin\tADJ", "thing\tNOUN",
    "things\tNOUN", "think\tVERB", "thinked\tVERB", "thinking\tVERB", "thinks\tVERB", "thinly\tADV",
    "third\tNUM", "thirteen\tNUM", "thirty\tNUM", "this\tPRON", "those\tPRON", "thousand\tNUM",
    "thread\tNOUN", "threads\tNOUN", "three\tNUM", "threshold\tNOUN", "thresholds\tNOUN",
    "thrilled\tADJ", "thrive\tVERB", "thrived\tVERB", "thrives\tVERB", "thriving\tVERB",
    "throat\tNOUN", "throats\tNOUN", "throw\tVERB", "throwed\tVERB", "throwing\tVERB",
    "throws\tVERB", "thumb\tNOUN", "thumbs\tNOUN", "tick\tNOUN", "ticket\tNOUN", "tickets\tNOUN",
    "ticks\tNOUN", "tiger\tNOUN", "tigers\tNOUN", "time\tNOUN", "timeline\tNOUN", "timelines\tNOUN",
    "times\tNOUN", "tiny\tADJ", "tired\tADJ", "tissue\tNOUN", "tissues\tNOUN", "today\tADV",
    "toe\tNOUN", "toes\tNOUN", "together\tADV", "token\tNOUN", "tokens\tNOUN", "tomato\tNOUN",
    "tomatoes\tNOUN", "tomorrow\tADV", "tongue\tNOUN", "tongues\tNOUN", "tonight\tADV", "too\tADV",
    "tooth\tNOUN", "toothbrush\tNOUN", "toothbrushes\tNOUN", "toothpaste\tNOUN",
    "toothpastes\tNOUN", "tooths\tNOUN", "toss\tVERB", "tossed\tVERB", "tosses\tVERB",
    "tossing\tVERB", "total\tNOUN", "totally\tADV", "totals\tNOUN", "touch\tVERB", "touched\tVERB",
    "touches\tVERB", "touching\tVERB", "tour\tVERB", "toured\tVERB", "touring\tVERB",
    "tournament\tNOUN", "tournaments\tNOUN", "tours\tVERB", "towel\tNOUN", "towels\tNOUN",
    "town\tNOUN", "towns\tNOUN", "toxic\tADJ", "trace\tVERB", "traced\tVERB", "traces\tVERB",
    "tracing\tVERB", "track\tVERB", "tracked\tVERB", "tracking\tVERB", "tracks\tVERB",
    "tractor\tNOUN", "tractors\tNOUN", "trade\tVERB", "traded\tVERB", "trades\tVERB",
    "trading\tVERB", "tragedies\tNOUN", "tragedy\tNOUN", "train\tVERB", "trained\tVERB",
    "training\tVERB", "trains\tVERB", "transaction\tNOUN", "transactions\tNOUN", "transfer\tVERB",
    "transferred\tVERB", "transferring\tVERB", "transfers\tVERB", "transform\tVERB",
    "transformed\tVERB", "transforming\tVERB", "transforms\tVERB", "transmission\tNOUN",
    "transmissions\tNOUN", "transmit\tVERB", "transmits\tVERB", "transmitted\tVERB",
    "transmitting\tVERB", "transplant\tNOUN", "transplants\tNOUN", "travel\tVERB", "traveled\tVERB",
    "traveling\tVERB", "travels\tVERB", "treat\tVERB", "treated\tVERB", "treating\tVERB",
    "treatment\tNOUN", "treatments\tNOUN", "treats\tVERB", "tree\tNOUN", "trees\tNOUN",
    "trend\tVERB", "trended\tVERB", "trending\tVERB", "trends\tVERB", "trial\tNOUN", "trials\tNOUN",
    "triangle\tNOUN", "triangles\tNOUN", "tried\tVERB", "tries\tVERB", "trillion\tNUM",
    "trip\tNOUN", "trips\tNOUN", "trophies\tNOUN", "trophy\tNOUN", "true\tADJ", "truly\tADV",
    "trust\tVERB", "trusted\tVERB", "trusting\tVERB", "trusts\tVERB", "trustworthy\tADJ",
    "try\tVERB", "trying\tVERB", "tumor\tNOUN", "tumors\tNOUN", "turkey\tNOUN", "turkeys\tNOUN",
    "turn\tVERB", "turned\tVERB", "turning\tVERB", "turns\tVERB", "tutor\tVERB", "tutored\tVERB",
    "tutoring\tVERB", "tutors\tVERB", "tweet\tVERB", "tweeted\tVERB", "tweeting\tVERB",
    "tweets\tVERB", "twelve\tNUM", "twenty\tNUM", "twist\tVERB", "twisted\tVERB", "twisting\tVERB",
    "twists\tVERB", "twitter\tNOUN", "twitters\tNOUN", "two\tNUM", "typical\tADJ", "typically\tADV",
    "ultrasound\tNOUN", "ultrasounds\tNOUN", "umbrella\tNOUN", "umbrellas\tNOUN",
    "unavailable\tADJ", "unavailably\tADV", "unaware\tADJ", "unawarely\tADV", "unbalanced\tADJ",
    "unbiased\tADJ", "uncertainties\tNOUN", "uncertainty\tNOUN", "uncommon\tADJ", "uncommonly\tADV",
    "unconfirmed\tADJ", "unconscious\tADJ", "unconsciously\tADV", "understand\tVERB",
    "understanded\tVERB", "understanding\tVERB", "understands\tVERB", "unemployment\tNOUN",
    "unemployments\tNOUN", "unequal\tADJ", "unequally\tADV", "unfair\tADJ", "unfairly\tADV",
    "unfaithful\tADJ", "unfaithfully\tADV", "unfavorable\tADJ", "unfavorably\tADV",
    "unfollow\tVERB", "unfollowed\tVERB", "unfollowing\tVERB", "unfollows\tVERB", "unfriendly\tADJ",
    "unhappy\tADJ", "unhelpful\tADJ", "unhelpfully\tADV", "uniform\tNOUN", "uniforms\tNOUN",
    "unite\tVERB", "united\tVERB", "unites\tVERB", "uniting\tVERB", "universal\tADJ",
    "universally\tADV", "universe\tNOUN", "universes\tNOUN", "unjust\tADJ", "unjustly\tADV",
    "unkind\tADJ", "unkindly\tADV", "unlawful\tADJ", "unlawfully\tADV", "unlikely\tADJ",
    "unload\tVERB", "unloaded\tVERB", "unloading\tVERB", "unloads\tVERB", "unnecessary\tADJ",
    "unofficial\tADJ", "unofficially\tADV", "unpack\tVERB", "unpacked\tVERB", "unpacking\tVERB",
    "unpacks\tVERB", "unprepared\tADJ", "unready\tADJ", "unreliable\tADJ", "unreliably\tADV",
    "unsafe\tADJ", "unsafely\tADV", "unsanitary\tADJ", "unstable\tADJ", "unstably\tADV",
    "untrustworthy\tADJ", "unusual\tADJ", "unusually\tADV", "unvaccinated\tADJ", "unverified\tADJ",
    "unwell\tADJ", "unwelly\tADV", "update\tVERB", "updated\tVERB", "updates\tVERB",
    "updating\tVERB", "upgrade\tVERB", "upgraded\tVERB", "upgrades\tVERB", "upgrading\tVERB",
    "upload\tVERB", "uploaded\tVERB", "uploading\tVERB", "uploads\tVERB", "upset\tADJ",
    "upsetly\tADV", "upstairs\tADV", "urge\tVERB", "urged\tVERB", "urgent\tADJ", "urgently\tADV",
    "urges\tVERB", "urging\tVERB", "url\tNOUN", "urls\tNOUN", "us\tPRON", "use\tVERB", "used\tVERB",
    "useful\tADJ", "usefully\tADV", "useless\tADJ", "uselessly\tADV", "username\tNOUN",
    "usernames\tNOUN", "uses\tVERB", "using\tVERB", "usual\tADJ", "usually\tADV", "vaccinate\tVERB",
    "vaccinated\tVERB", "vaccinates\tVERB", "vaccinating\tVERB", "vaccine\tNOUN", "vaccines\tNOUN",
    "vacuum\tVERB", "vacuumed\tVERB", "vacuuming\tVERB", "vacuums\tVERB", "valid\tADJ",
    "validly\tADV", "valley\tNOUN", "valleys\tNOUN", "valuable\tADJ", "valuably\tADV",
    "value\tNOUN", "values\tNOUN", "variable\tNOUN", "variables\tNOUN", "variance\tNOUN",
    "variances\tNOUN", "variant\tNOUN", "variants\tNOUN", "vase\tNOUN", "vases\tNOUN",
    "vector\tNOUN", "vectors\tNOUN", "vegetable\tNOUN", "vegetables\tNOUN", "vein\tNOUN",
    "veins\tNOUN", "velocities\tNOUN", "velocity\tNOUN", "ventilation\tNOUN", "ventilations\tNOUN",
    "ventilator\tNOUN", "ventilators\tNOUN", "verified\tVERB", "verifies\tVERB", "verify\tVERB",
    "verifying\tVERB", "very\tADV", "vial\tNOUN", "vials\tNOUN", "view\tNOUN", "views\tNOUN",
    "vinegar\tNOUN", "vinegars\tNOUN", "violate\tVERB", "violated\tVERB", "violates\tVERB",
    "violating\tVERB", "violation\tNOUN", "violations\tNOUN", "viral\tADJ", "virally\tADV",
    "virtual\tADJ", "virtually\tADV", "virus\tNOUN", "viruses\tNOUN", "visa\tNOUN", "visas\tNOUN",
    "visit\tVERB", "visited\tVERB", "visiting\tVERB", "visits\tVERB", "visualize\tVERB",
    "visualized\tVERB", "visualizes\tVERB", "visualizing\tVERB", "vitamin\tNOUN", "vitamins\tNOUN",
    "voice\tNOUN", "voices\tNOUN", "volatile\tADJ", "volatily\tADV", "volume\tNOUN",
    "volumes\tNOUN", "voluntary\tADJ", "vote\tNOUN", "votes\tNOUN", "voyage\tNOUN", "voyages\tNOUN",
    "vulnerable\tADJ", "vulnerably\tADV", "wage\tNOUN", "wages\tNOUN", "wait\tVERB", "waited\tVERB",
    "waiting\tVERB", "waits\tVERB", "walk\tVERB", "walked\tVERB", "walking\tVERB", "walks\tVERB",
    "wall\tNOUN", "wallet\tNOUN", "wallets\tNOUN", "walls\tNOUN", "want\tVERB", "wanted\tVERB",
    "wanting\tVERB", "wants\tVERB", "war\tNOUN", "ward\tNOUN", "wardrobe\tNOUN", "wardrobes\tNOUN",
    "wards\tNOUN", "warehouse\tNOUN", "warehouses\tNOUN", "warm\tADJ", "warmly\tADV", "warn\tVERB",
    "warned\tVERB", "warning\tVERB", "warns\tVERB", "wars\tNOUN", "wash\tVERB", "washed\tVERB",
    "washes\tVERB", "washing\tVERB", "wasp\tNOUN", "wasps\tNOUN", "waste\tVERB", "wasted\tVERB",
    "wastes\tVERB", "wasting\tVERB", "watch\tVERB", "watched\tVERB", "watches\tVERB",
    "watching\tVERB", "water\tNOUN", "waters\tNOUN", "wave\tNOUN", "wavelength\tNOUN",
    "wavelengths\tNOUN", "waves\tNOUN", "way\tNOUN", "ways\tNOUN", "we\tPRON", "wealthy\tADJ",
    "wear\tVERB", "weared\tVERB", "wearing\tVERB", "wears\tVERB", "weather\tNOUN", "weathers\tNOUN",
    "website\tNOUN", "websites\tNOUN", "week\tNOUN", "weekly\tADV", "weeks\tNOUN", "weigh\tVERB",
    "weighed\tVERB", "weighing\tVERB", "weighs\tVERB", "weight\tNOUN", "weights\tNOUN", "well\tADV",
    "wellness\tNOUN", "wellnesses\tNOUN", "wet\tADJ", "whale\tNOUN", "whales\tNOUN", "what\tPRON",
    "wheat\tNOUN", "wheats\tNOUN", "wheelchair\tNOUN", "wheelchairs\tNOUN", "which\tPRON",
    "whisk\tVERB", "whisked\tVERB", "whisking\tVERB", "whisks\tVERB", "whistle\tNOUN",
    "whistles\tNOUN", "who\tPRON", "whole\tNOUN", "wholes\tNOUN", "wholy\tADV", "whom\tPRON",
    "whose\tPRON", "wide\tADJ", "widely\tADV", "widespread\tADJ", "widespreadly\tADV", "wife\tNOUN",
    "wifes\tNOUN", "wildlife\tNOUN", "wildlifes\tNOUN", "willing\tADJ", "willingly\tADV",
    "win\tVERB", "window\tNOUN", "windows\tNOUN", "windy\tADJ", "winned\tVERB", "winner\tNOUN",
    "winners\tNOUN", "winning\tVERB", "wins\tVERB", "winter\tNOUN", "winters\tNOUN", "wipe\tVERB",
    "wiped\tVERB", "wipes\tVERB", "wiping\tVERB", "wire\tNOUN", "wires\tNOUN", "wisdom\tNOUN",
    "wisdoms\tNOUN", "wise\tADJ", "wisely\tADV", "wish\tVERB", "wished\tVERB", "wishes\tVERB",
    "wishing\tVERB", "wolf\tNOUN", "wolfs\tNOUN", "woman\tNOUN", "womans\tNOUN", "wonder\tVERB",
    "wondered\tVERB", "wondering\tVERB", "wonders\tVERB", "wood\tNOUN", "woods\tNOUN", "wool\tNOUN",
    "wools\tNOUN", "word\tNOUN", "words\tNOUN", "work\tVERB", "worked\tVERB", "worker\tNOUN",
    "workers\tNOUN", "working\tVERB", "workout\tNOUN", "workouts\tNOUN", "works\tVERB",
    "world\tNOUN", "worlds\tNOUN", "worldwide\tADJ", "worldwidely\tADV", "worm\tNOUN",
    "worms\tNOUN", "worried\tADJ", "worsen\tVERB", "worsened\tVERB", "worsening\tVERB",
    "worsens\tVERB", "worthless\tADJ", "worthlessly\tADV", "wound\tNOUN", "wounds\tNOUN",
    "wrap\tVERB", "wrapped\tVERB", "wrapping\tVERB", "wraps\tVERB", "wrench\tNOUN",
    "wrenches\tNOUN", "wrist\tNOUN", "wrists\tNOUN", "write\tVERB", "writed\tVERB", "writes\tVERB",
    "writing\tVERB", "wrong\tADJ", "wrongly\tADV", "xray\tNOUN", "xrays\tNOUN", "year\tNOUN",
    "yearly\tADV", "years\tNOUN", "yesterday\tADV", "yet\tADV", "yield\tVERB", "yielded\tVERB",
    "yielding\tVERB", "yields\tVERB", "yoga\tNOUN", "yogas\tNOUN", "you\tPRON", "young\tADJ",
    "youngly\tADV", "your\tPRON", "yours\tPRON", "yourself\tPRON", "yourselves\tPRON", "zero\tNUM",
    "zinc\tNOUN", "zincs\tNOUN",
};

}  // namespace misinfo::data
