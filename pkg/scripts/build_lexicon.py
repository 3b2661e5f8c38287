#!/usr/bin/env python3
"""Regenerate src/lexminer/data/lexicon.txt from curated word lists.

The lexicon maps lowercased word forms to ordered tag lists (most likely
tag first). Open-class lemmas below are expanded into their inflected
forms; words whose behaviour the expander cannot derive (irregulars,
ambiguous forms, domain idioms) are pinned in EXPLICIT at the end, which
wins over anything generated earlier.

Run from the repository root:

    python scripts/build_lexicon.py
"""

from __future__ import annotations

import collections
from pathlib import Path

OUT_PATH = Path(__file__).resolve().parent.parent / "src" / "lexminer" / "data" / "lexicon.txt"

VOWELS = "aeiou"

# ---------------------------------------------------------------------------
# Closed classes
# ---------------------------------------------------------------------------

CLOSED = {
    "CC": ["and", "or", "but", "nor", "yet", "plus", "versus"],
    "DT": ["the", "a", "an", "this", "these", "those", "each", "every",
           "either", "neither", "some", "any", "no", "another"],
    "EX": ["there"],
    "IN": ["of", "in", "on", "at", "by", "for", "with", "from", "into",
           "onto", "upon", "under", "over", "after", "before", "between",
           "among", "against", "during", "without", "within", "through",
           "throughout", "about", "above", "below", "beyond", "behind",
           "near", "since", "until", "till", "toward", "towards", "per",
           "via", "despite", "unless", "although", "though", "because",
           "whether", "while", "whereas", "if", "than", "as", "except",
           "amid", "pending", "notwithstanding", "vide"],
    "MD": ["can", "could", "may", "might", "must", "shall", "should",
           "will", "would", "ought", "cannot"],
    "PDT": ["all", "both", "half", "such"],
    "PRP": ["i", "you", "he", "she", "it", "we", "they", "me", "him",
            "her", "us", "them", "himself", "herself", "itself",
            "themselves", "myself", "yourself", "ourselves", "oneself"],
    "PRP$": ["my", "your", "his", "its", "our", "their", "hers", "theirs",
             "mine", "yours", "ours"],
    "RP": ["up", "down", "out", "off", "away", "back", "aside", "forth"],
    "TO": ["to"],
    "UH": ["yes", "oh", "well", "please"],
    "WDT": ["which", "whichever", "whatever"],
    "WP": ["who", "whom", "what", "whoever", "whosoever"],
    "WP$": ["whose"],
    "WRB": ["when", "where", "why", "how", "whenever", "wherever",
            "however", "whereby", "wherein", "whereupon"],
}

ADVERBS = [
    "not", "never", "always", "often", "sometimes", "rarely", "seldom",
    "again", "already", "also", "almost", "altogether", "anywhere",
    "elsewhere", "everywhere", "nowhere", "somewhere", "here", "now",
    "then", "once", "twice", "soon", "still", "yesterday", "today",
    "tomorrow", "too", "very", "quite", "rather", "fairly", "nearly",
    "hardly", "merely", "solely", "only", "even", "just", "ever", "else",
    "instead", "moreover", "furthermore", "nevertheless", "nonetheless",
    "otherwise", "therefore", "thereby", "therein", "thereof", "thereto",
    "thereafter", "thereupon", "herein", "hereby", "hereinafter",
    "hereto", "hitherto", "forthwith", "meanwhile", "perhaps", "maybe",
    "indeed", "thus", "hence", "accordingly", "together", "apart",
    "abroad", "overseas", "ashore", "aboard", "anew", "afresh", "ahead",
    "behindhand", "beforehand", "forthright", "inter-alia", "prima-facie",
    "suo-motu", "ex-parte", "de-facto", "de-jure",
]

COMPARATIVE_ADVERBS = {
    "more": "RBR", "less": "RBR", "better": "RBR", "worse": "RBR",
    "earlier": "RBR", "later": "RBR", "sooner": "RBR", "further": "RBR",
    "most": "RBS", "least": "RBS", "best": "RBS", "worst": "RBS",
}

NUMBER_WORDS = [
    "one", "two", "three", "four", "five", "six", "seven", "eight",
    "nine", "ten", "eleven", "twelve", "thirteen", "fourteen", "fifteen",
    "sixteen", "seventeen", "eighteen", "nineteen", "twenty", "thirty",
    "forty", "fifty", "sixty", "seventy", "eighty", "ninety", "hundred",
    "thousand", "million", "billion", "dozen",
]

# ---------------------------------------------------------------------------
# Verbs. Regular lemmas are expanded to VB/VBZ/VBD/VBN/VBG; irregular
# forms are spelled out. Past forms get VBD first; the contextual repair
# rules flip VBD to VBN in passive contexts.
# ---------------------------------------------------------------------------

VERBS_REGULAR = [
    "accept", "accompany", "accuse", "achieve", "acknowledge", "acquire",
    "act", "add", "address", "adjourn", "adjudicate", "administer",
    "admit", "adopt", "advance", "advise", "affect", "affirm", "agree",
    "allege", "allocate", "allow", "amend", "amount", "announce",
    "annul", "answer", "appeal", "appear", "apply", "appoint",
    "apportion", "appreciate", "apprehend", "approach", "approve",
    "argue", "arise", "arrange", "arrest", "arrive", "ask", "assault",
    "assert", "assess", "assign", "assist", "assume", "assure",
    "attach", "attack", "attempt", "attend", "attest", "authorise",
    "authorize", "avail", "avoid", "award", "ban", "base", "bar",
    "believe", "belong", "benefit", "block", "board", "borrow",
    "breach", "burden", "calculate", "call", "cancel", "care", "carry",
    "cause", "cease", "certify", "challenge", "change", "charge",
    "cheat", "check", "circulate", "cite", "claim", "clarify",
    "classify", "clean", "clear", "close", "collect", "combine",
    "commence", "commit", "communicate", "compare", "compel",
    "compensate", "complain", "complete", "comply", "compute",
    "conceal", "concede", "concern", "conclude", "condemn", "conduct",
    "confer", "confine", "confirm", "confiscate", "conform", "connect",
    "consent", "consider", "consist", "conspire", "constitute",
    "construct", "construe", "consult", "consume", "contain", "contend",
    "contest", "continue", "contract", "contradict", "contravene",
    "contribute", "control", "convene", "convert", "convict",
    "convince", "cooperate", "coordinate", "correct", "corroborate",
    "count", "cover", "create", "cross", "curtail", "damage", "date",
    "decide", "declare", "decline", "decrease", "dedicate", "deduct",
    "defame", "default", "defend", "defer", "define", "delay",
    "delegate", "delete", "deliver", "demand", "demolish", "demote",
    "denote", "deny", "depart", "depend", "deport", "deprive",
    "derive", "describe", "deserve", "designate", "desire", "destroy",
    "detail", "detain", "detect", "deter", "determine", "develop",
    "deviate", "devolve", "differ", "direct", "disagree", "disallow",
    "disappear", "discharge", "disclose", "disconnect", "discontinue",
    "discover", "discriminate", "discuss", "dismiss", "dispatch",
    "dispense", "displace", "display", "dispose", "dispute",
    "disqualify", "disregard", "dissent", "dissolve", "distinguish",
    "distribute", "disturb", "divide", "divulge", "document", "donate",
    "doubt", "drop", "earn", "edit", "educate", "effect", "elect",
    "employ", "empower", "enable", "enact", "encourage", "end",
    "endorse", "enforce", "engage", "enjoin", "enjoy", "enlist",
    "enquire", "enrol", "ensure", "enter", "entertain", "entitle",
    "entrust", "enumerate", "equip", "erect", "err", "escape",
    "establish", "estimate", "evacuate", "evade", "evaluate", "evict",
    "examine", "exceed", "except", "exchange", "exclude", "excuse",
    "execute", "exempt", "exercise", "exhaust", "exhibit", "exist",
    "expect", "expel", "expire", "explain", "express", "extend",
    "extinguish", "extract", "face", "fail", "favour", "fear",
    "file", "fill", "finalise", "fine", "finish", "fish", "fix",
    "follow", "forfeit", "form", "formulate", "forward", "frame",
    "fulfil", "function", "furnish", "gain", "gather", "gazette",
    "generate", "govern", "grant", "guarantee", "guard", "handle",
    "happen", "harass", "harm", "hamper", "help", "hinder", "hire",
    "honour", "hope", "identify", "ignore", "impede", "implement",
    "implicate", "imply", "import", "impose", "impound", "imprison",
    "improve", "impute", "include", "increase", "incur", "indicate",
    "indict", "infer", "inflict", "inform", "infringe", "inherit",
    "initiate", "injure", "inquire", "insist", "inspect", "instal",
    "install", "institute", "instruct", "insult", "insure", "intend",
    "intercept", "interfere", "interpret", "interrogate", "interrupt",
    "intervene", "interview", "intimate", "intimidate", "introduce",
    "invalidate", "investigate", "invite", "invoke", "involve", "issue",
    "join", "judge", "justify", "kill", "labour", "lack", "land",
    "lapse", "launch", "leak", "learn", "lease", "legislate", "levy",
    "liberate", "license", "lift", "limit", "list", "live", "locate",
    "lock", "lodge", "look", "maintain", "manage", "mandate", "mark",
    "marry", "matter", "measure", "mediate", "mention", "merge",
    "migrate", "mine", "mislead", "misplace", "miss", "mitigate",
    "modify", "monitor", "move", "name", "need", "neglect",
    "negotiate", "nominate", "note", "notice", "notify", "nullify",
    "object", "oblige", "observe", "obstruct", "obtain", "occasion",
    "occupy", "occur", "offend", "offer", "omit", "open", "operate",
    "oppose", "oppress", "order", "ordain", "organise", "organize",
    "originate", "overlook", "overrule", "overturn", "own", "pardon",
    "park", "participate", "pass", "penalise", "perform", "permit",
    "persuade", "pertain", "petition", "place", "plan", "plant",
    "plead", "pledge", "point", "police", "pollute", "possess",
    "post", "postpone", "practise", "pray", "precede", "preclude",
    "prefer", "prejudice", "prepare", "prescribe", "present",
    "preserve", "preside", "press", "presume", "prevail", "prevent",
    "print", "proceed", "process", "proclaim", "procure", "produce",
    "profit", "prohibit", "promise", "promote", "promulgate",
    "pronounce", "propose", "prosecute", "protect", "protest", "prove",
    "provide", "provoke", "publish", "punish", "purchase", "pursue",
    "qualify", "quash", "question", "raise", "rank", "ratify", "reach",
    "realise", "reason", "recall", "receive", "recognise", "recognize",
    "recommend", "reconsider", "record", "recover", "recruit",
    "rectify", "redress", "reduce", "refer", "refrain", "refund",
    "refuse", "regard", "register", "regret", "regulate", "reinstate",
    "reiterate", "reject", "relate", "release", "relieve", "rely",
    "remain", "remand", "remedy", "remember", "remind", "remit",
    "remove", "render", "renew", "rent", "repair", "repatriate",
    "repeal", "repeat", "replace", "reply", "report", "represent",
    "reprimand", "request", "require", "rescind", "research", "reserve",
    "reside", "resign", "resist", "resolve", "respect", "respond",
    "rest", "restore", "restrain", "restrict", "result", "resume",
    "retain", "retire", "return", "reveal", "reverse", "review",
    "revise", "revoke", "reward", "rule", "sanction", "satisfy",
    "save", "scrutinise", "search", "secure", "seem", "seize",
    "select", "sentence", "separate", "serve", "settle", "share",
    "show", "sign", "smuggle", "solicit", "solve", "specify", "stamp",
    "start", "state", "stay", "stipulate", "stop", "study", "subject",
    "submit", "subscribe", "substitute", "succeed", "sue", "suffer",
    "suggest", "summon", "supersede", "supervise", "supply", "support",
    "suppress", "surrender", "survey", "survive", "suspect", "suspend",
    "sustain", "tamper", "target", "tax", "terminate", "test",
    "testify", "threaten", "tolerate", "torture", "trade", "train",
    "transfer", "transform", "translate", "transmit", "transport",
    "travel", "treat", "trespass", "try", "turn", "uphold", "urge",
    "use", "usurp", "utilise", "vacate", "validate", "value", "vary",
    "verify", "vest", "vet", "victimise", "view", "violate", "visit",
    "void", "vote", "wait", "waive", "walk", "want", "warn", "warrant",
    "waste", "watch", "weigh", "withhold", "witness", "wonder", "work",
    "wound", "wrong",
]

# final consonant doubles before -ed / -ing
DOUBLE_FINAL = {
    "ban", "bar", "commit", "compel", "confer", "control", "defer",
    "demit", "deter", "drop", "equip", "impel", "incur", "infer",
    "occur", "omit", "permit", "plan", "prefer", "refer", "regret",
    "remit", "stop", "submit", "tamper", "transfer", "vet",
}
DOUBLE_FINAL -= {"tamper"}  # tampered, tampering

IRREGULAR_VERBS = {
    # lemma: (VBZ, VBD, VBN, VBG)
    "be": None,  # handled in EXPLICIT
    "arise": ("arises", "arose", "arisen", "arising"),
    "become": ("becomes", "became", "become", "becoming"),
    "begin": ("begins", "began", "begun", "beginning"),
    "bind": ("binds", "bound", "bound", "binding"),
    "break": ("breaks", "broke", "broken", "breaking"),
    "bring": ("brings", "brought", "brought", "bringing"),
    "build": ("builds", "built", "built", "building"),
    "buy": ("buys", "bought", "bought", "buying"),
    "catch": ("catches", "caught", "caught", "catching"),
    "choose": ("chooses", "chose", "chosen", "choosing"),
    "come": ("comes", "came", "come", "coming"),
    "cost": ("costs", "cost", "cost", "costing"),
    "cut": ("cuts", "cut", "cut", "cutting"),
    "deal": ("deals", "dealt", "dealt", "dealing"),
    "do": ("does", "did", "done", "doing"),
    "draw": ("draws", "drew", "drawn", "drawing"),
    "drive": ("drives", "drove", "driven", "driving"),
    "eat": ("eats", "ate", "eaten", "eating"),
    "fall": ("falls", "fell", "fallen", "falling"),
    "feel": ("feels", "felt", "felt", "feeling"),
    "fight": ("fights", "fought", "fought", "fighting"),
    "find": ("finds", "found", "found", "finding"),
    "forbid": ("forbids", "forbade", "forbidden", "forbidding"),
    "forget": ("forgets", "forgot", "forgotten", "forgetting"),
    "get": ("gets", "got", "got", "getting"),
    "give": ("gives", "gave", "given", "giving"),
    "go": ("goes", "went", "gone", "going"),
    "grow": ("grows", "grew", "grown", "growing"),
    "have": ("has", "had", "had", "having"),
    "hear": ("hears", "heard", "heard", "hearing"),
    "hide": ("hides", "hid", "hidden", "hiding"),
    "hit": ("hits", "hit", "hit", "hitting"),
    "hold": ("holds", "held", "held", "holding"),
    "hurt": ("hurts", "hurt", "hurt", "hurting"),
    "keep": ("keeps", "kept", "kept", "keeping"),
    "know": ("knows", "knew", "known", "knowing"),
    "lay": ("lays", "laid", "laid", "laying"),
    "lead": ("leads", "led", "led", "leading"),
    "leave": ("leaves", "left", "left", "leaving"),
    "lend": ("lends", "lent", "lent", "lending"),
    "let": ("lets", "let", "let", "letting"),
    "lie": ("lies", "lay", "lain", "lying"),
    "lose": ("loses", "lost", "lost", "losing"),
    "make": ("makes", "made", "made", "making"),
    "mean": ("means", "meant", "meant", "meaning"),
    "meet": ("meets", "met", "met", "meeting"),
    "pay": ("pays", "paid", "paid", "paying"),
    "put": ("puts", "put", "put", "putting"),
    "quit": ("quits", "quit", "quit", "quitting"),
    "read": ("reads", "read", "read", "reading"),
    "ride": ("rides", "rode", "ridden", "riding"),
    "rise": ("rises", "rose", "risen", "rising"),
    "run": ("runs", "ran", "run", "running"),
    "say": ("says", "said", "said", "saying"),
    "see": ("sees", "saw", "seen", "seeing"),
    "seek": ("seeks", "sought", "sought", "seeking"),
    "sell": ("sells", "sold", "sold", "selling"),
    "send": ("sends", "sent", "sent", "sending"),
    "set": ("sets", "set", "set", "setting"),
    "shut": ("shuts", "shut", "shut", "shutting"),
    "sing": ("sings", "sang", "sung", "singing"),
    "sink": ("sinks", "sank", "sunk", "sinking"),
    "sit": ("sits", "sat", "sat", "sitting"),
    "speak": ("speaks", "spoke", "spoken", "speaking"),
    "spend": ("spends", "spent", "spent", "spending"),
    "spread": ("spreads", "spread", "spread", "spreading"),
    "stand": ("stands", "stood", "stood", "standing"),
    "steal": ("steals", "stole", "stolen", "stealing"),
    "strike": ("strikes", "struck", "struck", "striking"),
    "swear": ("swears", "swore", "sworn", "swearing"),
    "take": ("takes", "took", "taken", "taking"),
    "teach": ("teaches", "taught", "taught", "teaching"),
    "tell": ("tells", "told", "told", "telling"),
    "think": ("thinks", "thought", "thought", "thinking"),
    "throw": ("throws", "threw", "thrown", "throwing"),
    "understand": ("understands", "understood", "understood", "understanding"),
    "undertake": ("undertakes", "undertook", "undertaken", "undertaking"),
    "wear": ("wears", "wore", "worn", "wearing"),
    "win": ("wins", "won", "won", "winning"),
    "withdraw": ("withdraws", "withdrew", "withdrawn", "withdrawing"),
    "write": ("writes", "wrote", "written", "writing"),
}

# ---------------------------------------------------------------------------
# Nouns (lemma -> NN, plural -> NNS unless uncountable)
# ---------------------------------------------------------------------------

NOUNS = [
    "abuse", "access", "accident", "accommodation", "account",
    "accountability", "accused", "acquisition", "act", "action",
    "address", "adjudication", "administration", "admission", "adult",
    "advance", "advancement", "advantage", "advice", "affidavit",
    "affairs", "age", "agency", "agent", "agreement", "agriculture",
    "aid", "airport", "allegation", "allocation", "allowance",
    "alternative", "ambulance", "amendment", "amount", "analysis",
    "animal", "answer", "apartment", "appeal", "appearance",
    "applicant", "application", "appointment", "apprehension",
    "approach", "approval", "arbitration", "area", "argument", "army",
    "arrears", "arrest", "article", "assault", "assembly",
    "assessment", "asset", "assignment", "assistance", "assistant",
    "association", "assurance", "attempt", "attention", "attorney",
    "auction", "audit", "authority", "authorisation", "award",
    "background", "bail", "balance", "ban", "bank", "bar", "barrier",
    "basis", "behalf", "behaviour", "belief", "bench", "benefit",
    "bias", "bid", "bill", "birth", "board", "body", "bond", "book",
    "border", "boundary", "boy", "branch", "breach", "bribe",
    "bribery", "bridge", "brief", "budget", "building", "burden",
    "bus", "business", "bystander", "cabinet", "cadre", "campaign",
    "canal", "cancellation", "candidate", "capacity", "capital",
    "caption", "car", "care", "career", "cargo", "case", "cash",
    "category", "cause", "caution", "ceiling", "censorship", "census",
    "centre", "ceremony", "certificate", "chain", "chairman",
    "challenge", "chance", "change", "channel", "chapter", "character",
    "charge", "charter", "chief", "child", "choice", "circular",
    "circumstance", "citizen", "citizenship", "city", "claim",
    "claimant", "clarification", "clause", "clerk", "client",
    "climate", "clinic", "code", "coercion", "collection", "college",
    "colleague", "colony", "column", "commission", "commissioner",
    "committee", "communication", "community", "company",
    "comparison", "compensation", "competition", "complaint",
    "completion", "compliance", "condition", "conduct", "conference",
    "confession", "confidence", "confirmation", "conflict",
    "connection", "consent", "consequence", "consideration",
    "conspiracy", "constable", "constitution", "construction",
    "consultation", "contact", "contempt", "content", "contention",
    "context", "contract", "contractor", "contravention", "control",
    "controversy", "convention", "conversation", "conviction",
    "cooperative", "copy", "corporation", "correspondence",
    "corruption", "cost", "council", "counsel", "country", "county",
    "course", "coverage", "creditor", "crime", "crisis", "criterion",
    "crop", "crowd", "culture", "custody", "custom", "customs",
    "damage", "danger", "data", "date", "daughter", "day", "deadline",
    "death", "debt", "deceit", "decision", "declaration", "decree",
    "deed", "default", "defect", "defence", "delay", "delegation",
    "delivery", "demand", "demarcation", "demolition", "demonstration",
    "demotion", "denial", "department", "dependant", "deployment",
    "deposit", "deprivation", "deputy", "designation", "detention",
    "determination", "development", "deviation", "device", "diary",
    "difference", "digest", "dignity", "direction", "director",
    "directive", "disability", "disadvantage", "disbursement",
    "discharge", "discipline", "disclosure", "disconnection",
    "discount", "discovery", "discretion", "discrimination",
    "discussion", "disease", "dismissal", "disobedience", "disparity",
    "displacement", "dispute", "disqualification", "distinction",
    "district", "disturbance", "division", "doctor", "doctrine",
    "document", "domain", "donation", "door", "draft", "drain",
    "driver", "drug", "due", "duty", "dweller", "dwelling", "earning",
    "economy", "edge", "editor", "education", "effect", "effluent",
    "effort", "election", "electricity", "eligibility", "embargo",
    "emergency", "employee", "employer", "employment", "enactment",
    "end", "enforcement", "engineer", "enjoyment", "enquiry",
    "enrolment", "enterprise", "entitlement", "entity", "entrance",
    "entry", "environment", "epidemic", "equality", "equipment",
    "error", "escape", "establishment", "estate", "estimate",
    "evacuation", "event", "eviction", "evidence", "exam",
    "examination", "example", "exception", "excess", "exchange",
    "exclusion", "excuse", "execution", "executive", "exemption",
    "exercise", "exhibit", "existence", "expansion", "expectation",
    "expense", "expenditure", "experience", "expert", "expiry",
    "explanation", "export", "expression", "expulsion", "extension",
    "extent", "extortion", "eye", "face", "facility", "fact",
    "factor", "factory", "failure", "fairness", "faith", "family",
    "farm", "farmer", "father", "fault", "favour", "fear", "fee",
    "felony", "female", "fence", "festival", "field", "figure",
    "file", "finance", "finding", "fine", "fire", "firm", "fisherman",
    "fishery", "fishing", "flat", "floor", "flow", "food", "force",
    "forest", "forfeiture", "form", "formation", "formula", "forum",
    "foundation", "franchise", "fraud", "freedom", "friend", "front",
    "fuel", "function", "fund", "future", "gain", "game", "garden",
    "gate", "gazette", "gender", "girl", "gold", "good", "goods",
    "governance", "government", "governor", "grade", "grant",
    "gratuity", "grievance", "ground", "group", "growth", "guarantee",
    "guard", "guardian", "guidance", "guideline", "hand", "harassment",
    "harbour", "harm", "head", "headmaster", "health", "hearing",
    "heart", "hearth", "hierarchy", "highway", "history", "holder",
    "holding", "holiday", "home", "hospital", "hostel", "hotel",
    "hour", "house", "household", "housing", "husband", "idea",
    "identification", "identity", "impact", "implementation",
    "import", "importance", "imprisonment", "improvement", "incident",
    "income", "increase", "increment", "independence", "individual",
    "industry", "inequality", "influence", "information",
    "infrastructure", "infringement", "injunction", "injury",
    "injustice", "inquiry", "inspection", "inspector", "instance",
    "institution", "instruction", "instrument", "insult", "insurance",
    "integrity", "intention", "interception", "interest",
    "interference", "interim", "interpretation", "interrogation",
    "interruption", "intervention", "interview", "intimidation",
    "investigation", "investment", "invitation", "invoice",
    "involvement", "irregularity", "island", "issue", "item",
    "jail", "jeep", "jewellery", "job", "journal", "journalist",
    "judge", "judgment", "judiciary", "jurisdiction", "justice",
    "justification", "kind", "knowledge", "labourer", "lake", "land",
    "landlord", "lane", "language", "lapse", "law", "lawyer",
    "leader", "leadership", "leaflet", "league", "leave", "lecture",
    "lecturer", "ledger", "legality", "legislation", "legislature",
    "legitimacy", "length", "lesson", "letter", "level", "liability",
    "liberty", "libel", "licence", "license", "life", "limb", "limit",
    "limitation", "line", "link", "list", "litigant", "litigation",
    "livelihood", "loan", "location", "lock", "lorry", "loss", "lot",
    "machine", "machinery", "magistrate", "mail", "maintenance",
    "majority", "male", "malice", "man", "management", "manager",
    "mandate", "manner", "manual", "map", "margin", "market",
    "marriage", "master", "material", "matter", "mayor", "measure",
    "mechanism", "media", "medicine", "meeting", "member",
    "membership", "memorandum", "memory", "merit", "message",
    "method", "minister", "ministry", "minor", "minority", "minute",
    "misconduct", "mistake", "mob", "model", "money", "monopoly",
    "month", "monument", "morning", "mother", "motion", "motive",
    "motor", "movement", "murder", "name", "nation", "nationality",
    "nature", "necessity", "need", "neglect", "negligence",
    "negotiation", "neighbour", "network", "news", "newspaper",
    "night", "nomination", "nominee", "notice", "notification",
    "notion", "nuisance", "number", "nurse", "oath", "obedience",
    "objection", "objective", "obligation", "observation",
    "obstruction", "occasion", "occupancy", "occupant", "occupation",
    "offence", "offender", "offer", "office", "officer", "official",
    "omission", "operation", "operator", "opinion", "opportunity",
    "opposition", "option", "order", "ordinance", "organisation",
    "origin", "outcome", "output", "overtime", "owner", "ownership",
    "package", "pact", "page", "pain", "panel", "paper", "parcel",
    "parent", "park", "parliament", "part", "participant",
    "participation", "particular", "partner", "party", "passage",
    "passenger", "passport", "past", "patient", "pattern", "pavement",
    "pay", "payment", "peace", "penalty", "pension", "pensioner",
    "people", "percentage", "performance", "period", "permission",
    "permit", "person", "personnel", "petition", "petitioner",
    "pharmacy", "phase", "phone", "photograph", "picture", "piece",
    "place", "plaintiff", "plan", "planning", "plant", "plantation",
    "platform", "plea", "pleasure", "pledge", "point", "police",
    "policeman", "policy", "polling", "pollution", "population",
    "portion", "position", "possession", "post", "poster",
    "postponement", "potential", "poverty", "power", "practice",
    "precaution", "precedent", "preference", "prejudice", "premise",
    "premises", "preparation", "presence", "president", "press",
    "pressure", "presumption", "prevention", "price", "principal",
    "principle", "priority", "prison", "prisoner", "privacy",
    "privilege", "probation", "problem", "procedure", "proceeding",
    "process", "procession", "procurement", "product", "production",
    "profession", "professor", "profile", "profit", "programme",
    "progress", "prohibition", "project", "promise", "promotion",
    "proof", "property", "proportion", "proposal", "proprietor",
    "prosecution", "prosecutor", "prospect", "protection", "protest",
    "protester", "provision", "proviso", "proximity", "public",
    "publication", "publicity", "publisher", "punishment", "purchase",
    "purpose", "pursuit", "qualification", "quality", "quantity",
    "quarantine", "quarter", "query", "question", "queue", "quota",
    "race", "radio", "rail", "railway", "rain", "range", "rank",
    "rate", "ratio", "reason", "receipt", "receiver", "reception",
    "recognition", "recommendation", "record", "recovery",
    "recruitment", "redress", "reduction", "reference", "referendum",
    "refusal", "refugee", "refund", "region", "register", "registrar",
    "registration", "registry", "regulation", "rehabilitation",
    "reinstatement", "rejection", "relation", "relationship",
    "release", "relevance", "relief", "religion", "remand", "remark",
    "remedy", "removal", "remuneration", "rent", "repair",
    "repayment", "report", "representation", "representative",
    "republic", "reputation", "request", "requirement", "rescue",
    "research", "reservation", "reservoir", "residence", "resident",
    "resignation", "resistance", "resolution", "resource", "respect",
    "respondent", "response", "responsibility", "rest", "restaurant",
    "restitution", "restoration", "restraint", "restriction",
    "result", "retirement", "return", "revenue", "reversal", "review",
    "revision", "revocation", "reward", "right", "riot", "risk",
    "river", "road", "role", "roll", "room", "route", "routine",
    "rule", "ruling", "rupee", "safeguard", "safety", "salary",
    "sale", "sample", "sanction", "sanctity", "scale", "scarcity",
    "scene", "schedule", "scheme", "scholar", "scholarship", "school",
    "scope", "screen", "scrutiny", "season", "seat", "secretary",
    "section", "sector", "security", "segment", "seizure", "selection",
    "seminar", "seniority", "sentence", "sequence", "servant",
    "service", "session", "settlement", "shanty", "share", "sheet",
    "shelter", "ship", "shop", "shortage", "side", "sign", "signal",
    "signature", "site", "situation", "size", "skill", "slander",
    "slogan", "society", "soldier", "solution", "son", "source",
    "space", "speaker", "speech", "speed", "sphere", "spirit",
    "sport", "spot", "spouse", "staff", "stage", "stamp", "stand",
    "standard", "standing", "state", "statelessness", "statement",
    "station", "status", "statute", "stay", "step", "stock", "stone",
    "stoppage", "storage", "store", "story", "strategy", "stream",
    "street", "strength", "stretch", "strike", "structure", "student",
    "study", "subject", "submission", "subscription", "subsidy",
    "substance", "substitution", "suburb", "success", "successor",
    "suit", "sum", "summary", "summons", "supervision", "supervisor",
    "supplier", "supply", "support", "suppression", "surcharge",
    "surface", "surgery", "surname", "surplus", "surveillance",
    "survey", "suspension", "suspicion", "system", "table", "tactic",
    "talk", "tank", "target", "tariff", "task", "tax", "taxation",
    "taxpayer", "teacher", "team", "technique", "technology",
    "telephone", "television", "temple", "tenant", "tender", "tenure",
    "term", "termination", "territory", "test", "testimony", "text",
    "theft", "theory", "threat", "time", "timetable", "title",
    "tort", "torture", "tourism", "town", "track", "trade",
    "tradition", "traffic", "train", "training", "transaction",
    "transcript", "transfer", "transition", "transmission",
    "transport", "treasury", "treatment", "treaty", "trend", "trial",
    "tribunal", "trip", "trust", "trustee", "truth", "turn", "type",
    "undertaking", "unemployment", "union", "unit", "university",
    "uprising", "usage", "use", "user", "utility", "vacancy",
    "vacation", "validity", "value", "van", "variation", "vehicle",
    "vendor", "venue", "verdict", "version", "victim",
    "victimisation", "victory", "view", "village", "villager",
    "violation", "violence", "visa", "visit", "visitor", "voice",
    "volume", "vote", "voter", "wage", "wall", "war", "ward",
    "warden", "warehouse", "warrant", "waste", "watch", "water",
    "way", "wealth", "weapon", "week", "weight", "welfare", "well",
    "wife", "will", "wisdom", "witness", "woman", "word", "work",
    "worker", "workman", "workshop", "world", "worship", "wound",
    "writ", "writer", "year", "youth", "zone",
]

UNCOUNTABLE = {
    "accountability", "advice", "agriculture", "arrears", "assistance",
    "bribery", "censorship", "citizenship", "coercion", "compliance",
    "contempt", "corruption", "custody", "customs", "data", "deceit",
    "dignity", "due", "education", "electricity", "employment",
    "enforcement", "environment", "equality", "equipment", "evidence",
    "fairness", "faith", "fishing", "food", "fuel", "furniture",
    "goods", "governance", "gold", "guidance", "harassment", "health",
    "housing", "independence", "information", "infrastructure",
    "integrity", "jewellery", "justice", "knowledge", "legality",
    "legislation", "legitimacy", "livelihood", "machinery",
    "maintenance", "malice", "management", "media", "medicine",
    "money", "negligence", "news", "obedience", "overtime", "peace",
    "people", "personnel", "planning", "police", "polling",
    "pollution", "poverty", "premises", "press", "privacy",
    "publicity", "quarantine", "recognition", "redress", "safety",
    "sanctity", "scarcity", "security", "seniority", "statelessness",
    "surveillance", "taxation", "tourism", "traffic", "training",
    "transport", "treasury", "unemployment", "violence", "wealth",
    "welfare", "wisdom", "worship",
}

IRREGULAR_PLURALS = {
    "child": "children", "man": "men", "woman": "women",
    "person": "persons", "fisherman": "fishermen",
    "policeman": "policemen", "workman": "workmen", "foot": "feet",
    "tooth": "teeth", "criterion": "criteria", "basis": "bases",
    "crisis": "crises", "analysis": "analyses", "wife": "wives",
    "life": "lives", "leaf": "leaves", "half": "halves",
    "memorandum": "memoranda", "summons": "summonses",
}

# ---------------------------------------------------------------------------
# Adjectives (JJ); a few common comparative/superlative forms pinned below
# ---------------------------------------------------------------------------

ADJECTIVES = [
    "able", "absent", "absolute", "abusive", "academic", "acceptable",
    "accessible", "accountable", "accurate", "active", "actual",
    "additional", "adequate", "administrative", "admissible", "adverse",
    "aged", "aggrieved", "agricultural", "alive", "alleged", "alone",
    "alternative", "ancient", "annual", "anxious", "apparent",
    "applicable", "appropriate", "arbitrary", "armed", "available",
    "average", "aware", "bad", "bare", "basic", "big", "bilateral",
    "binding", "black", "blank", "blind", "blue", "bogus", "bold",
    "bona-fide", "brief", "broad", "broken", "brown", "busy", "calm",
    "capable", "capital", "careful", "careless", "casual", "central",
    "certain", "cheap", "chief", "chronic", "civic", "civil", "clean",
    "clear", "clerical", "close", "coastal", "cold", "collective",
    "colonial", "comfortable", "commercial", "common", "communal",
    "comparative", "compassionate", "compensatory", "competent",
    "competitive", "complete", "compulsory", "concerned", "concrete",
    "conditional", "confidential", "consistent", "constant",
    "constitutional", "constructive", "contemporary", "contrary",
    "contractual", "convenient", "correct", "corrupt", "costly",
    "criminal", "critical", "crucial", "cruel", "cultural", "current",
    "customary", "daily", "dangerous", "dark", "dead", "deaf", "dear",
    "decent", "deep", "defective", "defiant", "deliberate",
    "democratic", "departmental", "dependent", "derogatory", "detailed",
    "different", "difficult", "diligent", "direct", "dirty", "disabled",
    "disciplinary", "discriminatory", "dishonest", "distinct",
    "district", "diverse", "divisional", "domestic", "dominant",
    "double", "doubtful", "dry", "due", "early", "eastern", "easy",
    "economic", "educational", "effective", "efficient", "elderly",
    "electoral", "electric", "electronic", "eligible", "emergency",
    "eminent", "emotional", "empty", "entire", "environmental", "equal",
    "equitable", "essential", "ethnic", "evident", "exact", "excess",
    "excessive", "exclusive", "executive", "exempt", "existing",
    "expensive", "expert", "explicit", "express", "extensive", "extra",
    "extraordinary", "extreme", "fair", "faithful", "false", "familiar",
    "famous", "far", "fatal", "faulty", "favourable", "federal",
    "female", "final", "financial", "fine", "firm", "fiscal", "fit",
    "fixed", "flagrant", "flat", "foreign", "formal", "former",
    "forthcoming", "fortunate", "forward", "fragile", "fraudulent",
    "free", "frequent", "fresh", "friendly", "full", "functional",
    "fundamental", "future", "general", "genuine", "glad", "global",
    "good", "gradual", "grave", "great", "green", "grey", "gross",
    "guilty", "happy", "hard", "harmful", "harsh", "heavy", "high",
    "historic", "historical", "honest", "hot", "hostile", "huge",
    "human", "humane", "identical", "idle", "illegal", "illegitimate",
    "illiterate", "immediate", "imminent", "impartial", "imperative",
    "implicit", "important", "improper", "inadequate", "inadmissible",
    "incapable", "incidental", "inclusive", "incompetent", "incomplete",
    "inconsistent", "incorrect", "independent", "indirect",
    "individual", "industrial", "ineffective", "inefficient",
    "ineligible", "inevitable", "inferior", "informal", "inherent",
    "initial", "injured", "innocent", "insufficient", "intact",
    "intense", "intentional", "interim", "interior", "internal",
    "international", "invalid", "irregular", "irrelevant", "joint",
    "judicial", "junior", "just", "keen", "key", "kind", "large",
    "late", "lawful", "leading", "legal", "legislative", "legitimate",
    "lengthy", "lenient", "liable", "liberal", "light", "likely",
    "limited", "literary", "little", "local", "logical", "long",
    "loud", "low", "loyal", "magisterial", "main", "major",
    "malicious", "mandatory", "manifest", "manual", "marginal",
    "marine", "marital", "maritime", "married", "material", "maximum",
    "mechanical", "medical", "mental", "mere", "middle", "military",
    "minimal", "minimum", "minor", "miscellaneous", "mobile",
    "moderate", "modern", "monetary", "monthly", "moral", "municipal",
    "mutual", "narrow", "national", "native", "natural", "naval",
    "near", "nearby", "necessary", "negative", "negligent", "nervous",
    "neutral", "new", "nice", "noisy", "nominal", "normal", "northern",
    "notable", "notorious", "null", "obvious", "occasional", "odd",
    "offensive", "official", "old", "open", "operational", "opposite",
    "oppressive", "oral", "ordinary", "organic", "original", "other",
    "outdoor", "outer", "outstanding", "overall", "overdue", "overseas",
    "parallel", "paramount", "parental", "parliamentary", "partial",
    "particular", "passive", "past", "patent", "patient", "peaceful",
    "pecuniary", "penal", "pending", "perfect", "periodic", "permanent",
    "permissible", "personal", "persuasive", "physical", "plain",
    "plausible", "pleasant", "polite", "political", "poor", "popular",
    "positive", "possible", "postal", "potential", "powerful",
    "practicable", "practical", "precarious", "precise", "pregnant",
    "preliminary", "premature", "present", "presidential", "previous",
    "primary", "prime", "principal", "prior", "private", "probable",
    "procedural", "professional", "prominent", "prompt", "proper",
    "proportionate", "prospective", "provincial", "provisional",
    "prudent", "public", "punctual", "punitive", "pure", "qualified",
    "quick", "quiet", "racial", "random", "rapid", "rare", "rash",
    "raw", "ready", "real", "reasonable", "recent", "red", "redundant",
    "regional", "regular", "regulatory", "relative", "relevant",
    "reliable", "religious", "remote", "repeated", "representative",
    "repressive", "residential", "responsible", "restrictive",
    "retired", "retrospective", "revolutionary", "rich", "rigid",
    "rival", "rough", "round", "routine", "royal", "rural", "sad",
    "safe", "same", "satisfactory", "scarce", "scientific", "secret",
    "secular", "secure", "select", "senior", "sensible", "sensitive",
    "separate", "serious", "several", "severe", "sharp", "short",
    "sick", "significant", "silent", "similar", "simple", "sincere",
    "single", "slight", "slow", "small", "smooth", "social", "socio-economic",
    "soft", "sole", "solid", "sound", "southern", "spacious", "special",
    "specific", "speedy", "stable", "standard", "state", "statutory",
    "steady", "steep", "straight", "strange", "strict", "strong",
    "structural", "subordinate", "subsequent", "substantial",
    "substantive", "successful", "successive", "sudden", "sufficient",
    "suitable", "summary", "superior", "supplementary", "supreme",
    "sure", "surplus", "suspicious", "sustainable", "systematic",
    "tall", "technical", "temporary", "tentative", "terrible",
    "territorial", "thick", "thin", "thorough", "tight", "timely",
    "tiny", "top", "total", "tough", "toxic", "traditional", "tragic",
    "transparent", "tremendous", "trivial", "true", "typical",
    "ultimate", "unable", "unacceptable", "unanimous", "unauthorised",
    "unauthorized", "unaware", "uncertain", "unclear", "unconditional",
    "unconstitutional", "undue", "unequal", "unexpected", "unfair",
    "unfit", "unfortunate", "unhappy", "uniform", "unilateral",
    "unique", "unjust", "unlawful", "unlikely", "unnecessary",
    "unpaid", "unreasonable", "unsafe", "unsatisfactory", "unsound",
    "unusual", "upper", "uppermost", "urban", "urgent", "useful",
    "useless", "usual", "vacant", "vague", "valid", "valuable",
    "variable", "various", "vast", "verbal", "vexatious", "viable",
    "vicarious", "vigilant", "violent", "visible", "visual", "vital",
    "vocational", "voluntary", "vulnerable", "warm", "weak", "wealthy",
    "weekly", "western", "white", "whole", "wide", "widespread",
    "wild", "wilful", "willing", "wise", "wooden", "wrong", "wrongful",
    "yellow", "young", "zonal",
]

COMPARATIVES = {
    # word: tag
    "greater": "JJR", "greatest": "JJS", "higher": "JJR",
    "highest": "JJS", "lower": "JJR", "lowest": "JJS", "larger": "JJR",
    "largest": "JJS", "smaller": "JJR", "smallest": "JJS",
    "older": "JJR", "oldest": "JJS", "younger": "JJR", "youngest": "JJS",
    "earlier": "JJR", "earliest": "JJS", "longer": "JJR",
    "longest": "JJS", "shorter": "JJR", "shortest": "JJS",
    "stronger": "JJR", "strongest": "JJS", "weaker": "JJR",
    "wider": "JJR", "widest": "JJS", "narrower": "JJR", "deeper": "JJR",
    "broader": "JJR", "closer": "JJR", "closest": "JJS",
    "quicker": "JJR", "quickest": "JJS", "slower": "JJR",
    "stricter": "JJR", "strictest": "JJS", "safer": "JJR",
    "safest": "JJS", "cheaper": "JJR", "cheapest": "JJS",
    "newer": "JJR", "newest": "JJS", "poorer": "JJR", "poorest": "JJS",
    "richer": "JJR", "richest": "JJS", "elder": "JJR", "eldest": "JJS",
    "lesser": "JJR", "fewer": "JJR", "fewest": "JJS",
}

# ---------------------------------------------------------------------------
# Explicit entries pinned last: ambiguous words with a deliberate tag
# order, contractions, irregular function forms. These override the
# generated entries completely.
# ---------------------------------------------------------------------------

EXPLICIT = {
    "be": "VB", "am": "VBP", "is": "VBZ", "are": "VBP", "was": "VBD",
    "were": "VBD", "been": "VBN", "being": "VBG",
    "have": "VB,VBP", "has": "VBZ", "had": "VBD,VBN", "having": "VBG",
    "do": "VB,VBP", "does": "VBZ", "did": "VBD", "done": "VBN",
    "doing": "VBG",
    "'s": "POS",
    "n't": "RB", "'ll": "MD", "'ve": "VBP", "'re": "VBP", "'d": "MD",
    "etc": "FW", "et": "FW", "al": "FW", "viz": "FW", "ibid": "FW",
    "inter": "FW", "alia": "FW", "suo": "FW", "motu": "FW",
    "mr": "NNP", "mrs": "NNP", "ms": "NNP", "dr": "NNP", "hon": "NNP",
    "st": "NNP", "rs": "NNP", "no": "DT,NN", "nos": "NNS",
    # noun/verb and noun/adjective ambiguities, preferred reading first
    "that": "DT,IN,WDT", "this": "DT", "all": "PDT,DT", "both": "PDT,DT",
    "such": "PDT,JJ", "half": "PDT,NN", "more": "JJR,RBR",
    "most": "JJS,RBS", "less": "JJR,RBR", "least": "JJS,RBS",
    "own": "JJ,VB", "back": "RB,NN", "like": "IN,VB", "so": "RB,IN",
    "further": "JJ,RBR", "well": "RB,NN", "right": "NN,JJ",
    "rights": "NNS", "act": "NN,VB", "acts": "NNS,VBZ",
    "charge": "NN,VB", "order": "NN,VB", "rule": "NN,VB",
    "report": "NN,VB", "reports": "NNS,VBZ", "transfer": "NN,VB",
    "appeal": "NN,VB", "claim": "NN,VB", "question": "NN,VB",
    "answer": "NN,VB", "notice": "NN,VB",
    "arrest": "NN,VB", "protest": "NN,VB", "permit": "NN,VB",
    "petition": "NN,VB", "award": "NN,VB", "grant": "NN,VB",
    "discharge": "NN,VB", "remand": "NN,VB", "post": "NN,VB",
    "press": "NN,VB", "strike": "NN,VB", "supply": "NN,VB",
    "trade": "NN,VB", "use": "NN,VB", "work": "NN,VB",
    "record": "NN,VB", "review": "NN,VB", "sanction": "NN,VB",
    "test": "NN,VB", "judge": "NN,VB", "fine": "NN,JJ,VB",
    "ban": "NN,VB", "leave": "NN,VB", "stay": "NN,VB", "suit": "NN,VB",
    "will": "MD,NN", "may": "MD,NNP", "might": "MD,NN",
    "hearing": "NN,VBG", "finding": "NN,VBG", "meeting": "NN,VBG",
    "building": "NN,VBG", "holding": "NN,VBG", "standing": "NN,VBG",
    "proceeding": "NN,VBG", "undertaking": "NN,VBG", "ruling": "NN,VBG",
    "polling": "NN,VBG", "fishing": "NN,VBG", "training": "NN,VBG",
    "planning": "NN,VBG", "housing": "NN,VBG", "reading": "NN,VBG",
    "writing": "NN,VBG", "accused": "NN,VBN,VBD", "deceased": "NN,JJ",
    "returning": "VBG,JJ",
    # participial adjectives that lead noun compounds in legal prose
    "qualified": "JJ,VBN,VBD", "retired": "JJ,VBN,VBD",
    "disabled": "JJ,VBN", "forced": "JJ,VBN,VBD",
    "fixed": "JJ,VBN,VBD", "armed": "JJ,VBN", "aggrieved": "JJ,VBN",
    "alleged": "JJ,VBN,VBD", "limited": "JJ,VBN,VBD",
    "injured": "JJ,VBN,VBD", "married": "JJ,VBN,VBD",
    "repeated": "JJ,VBN,VBD", "concerned": "JJ,VBN,VBD",
    "detailed": "JJ,VBN,VBD", "unauthorised": "JJ",
    "unauthorized": "JJ", "unpaid": "JJ", "learned": "JJ,VBN,VBD",
    "interested": "JJ,VBN,VBD", "reserved": "JJ,VBN,VBD",
    "organised": "JJ,VBN,VBD", "written": "JJ,VBN",
    "lost": "VBD,VBN,JJ", "left": "VBD,VBN,NN",
    "second": "JJ,NN", "first": "JJ,RB", "third": "JJ,NN",
    "fourth": "JJ", "fifth": "JJ", "last": "JJ,RB", "next": "JJ,RB",
    "former": "JJ", "latter": "JJ",
    "close": "VB,JJ", "open": "JJ,VB", "clean": "JJ,VB",
    "clear": "JJ,VB", "correct": "JJ,VB", "complete": "JJ,VB",
    "separate": "JJ,VB", "subject": "NN,JJ,VB", "minor": "JJ,NN",
    "chief": "JJ,NN", "principal": "NN,JJ", "official": "JJ,NN",
    "public": "JJ,NN", "private": "JJ,NN", "general": "JJ,NN",
    "present": "JJ,NN,VB", "patient": "NN,JJ", "material": "NN,JJ",
    "counsel": "NN,VB", "cross": "JJ,NN,VB", "even": "RB,JJ",
    "still": "RB,JJ", "enough": "RB,JJ", "much": "RB,JJ",
    "many": "JJ", "few": "JJ", "several": "JJ",
    "there": "EX,RB", "here": "RB", "against": "IN",
    "deceit": "NN", "data": "NNS,NN", "media": "NNS,NN",
    "premises": "NNS", "proceedings": "NNS", "damages": "NNS,VBZ",
    "costs": "NNS,VBZ", "arrears": "NNS", "earnings": "NNS",
    "savings": "NNS", "belongings": "NNS", "surroundings": "NNS",
    "contents": "NNS", "particulars": "NNS", "authorities": "NNS",
    "one": "CD,NN,PRP", "outside": "IN,JJ,RB", "inside": "IN,JJ,RB",
    "overseas": "JJ,RB",
    "off": "RP,IN", "up": "RP,IN", "down": "RP,IN", "out": "RP,IN",
    "over": "IN,RP", "about": "IN,RB", "around": "IN,RB",
    "islandwide": "RB,JJ", "nationwide": "RB,JJ", "worldwide": "RB,JJ",
}


def pluralize(noun: str) -> str:
    if noun in IRREGULAR_PLURALS:
        return IRREGULAR_PLURALS[noun]
    if noun.endswith(("s", "x", "z", "ch", "sh")):
        return noun + "es"
    if noun.endswith("y") and len(noun) > 1 and noun[-2] not in VOWELS:
        return noun[:-1] + "ies"
    if noun.endswith("o") and noun[-2:] not in ("oo", "eo", "io"):
        return noun + "es"
    return noun + "s"


def verb_forms(lemma: str) -> tuple[str, str, str, str]:
    """(VBZ, VBD, VBN, VBG) for a regular lemma."""
    if lemma.endswith(("s", "x", "z", "ch", "sh")):
        vbz = lemma + "es"
    elif lemma.endswith("y") and lemma[-2] not in VOWELS:
        vbz = lemma[:-1] + "ies"
    elif lemma.endswith("o"):
        vbz = lemma + "es"
    else:
        vbz = lemma + "s"

    stem = lemma
    if lemma in DOUBLE_FINAL:
        stem = lemma + lemma[-1]

    if lemma.endswith("e") and not lemma.endswith(("ee", "oe", "ye")):
        past = lemma + "d"
        ger = lemma[:-1] + "ing"
    elif lemma.endswith("y") and lemma[-2] not in VOWELS:
        past = lemma[:-1] + "ied"
        ger = lemma + "ing"
    else:
        past = stem + "ed"
        ger = stem + "ing"
    return vbz, past, past, ger


def main() -> None:
    lex: dict[str, list[str]] = collections.defaultdict(list)

    def add(word: str, tag: str) -> None:
        word = word.lower()
        if tag not in lex[word]:
            lex[word].append(tag)

    for tag, words in CLOSED.items():
        for w in words:
            add(w, tag)
    for w in ADVERBS:
        add(w, "RB")
    for w, tag in COMPARATIVE_ADVERBS.items():
        add(w, tag)
    for w in NUMBER_WORDS:
        add(w, "CD")

    for noun in NOUNS:
        add(noun, "NN")
        if noun not in UNCOUNTABLE:
            add(pluralize(noun), "NNS")

    for adj in ADJECTIVES:
        add(adj, "JJ")
    for w, tag in COMPARATIVES.items():
        add(w, tag)

    for lemma in VERBS_REGULAR:
        vbz, vbd, vbn, vbg = verb_forms(lemma)
        add(lemma, "VB")
        add(vbz, "VBZ")
        add(vbd, "VBD")
        if vbn != vbd:
            add(vbn, "VBN")
        else:
            add(vbd, "VBN")
        add(vbg, "VBG")
    for lemma, forms in IRREGULAR_VERBS.items():
        if forms is None:
            continue
        vbz, vbd, vbn, vbg = forms
        add(lemma, "VB")
        add(vbz, "VBZ")
        add(vbd, "VBD")
        add(vbn, "VBN")
        add(vbg, "VBG")

    # explicit entries replace whatever was generated
    for word, tags in EXPLICIT.items():
        lex[word.lower()] = tags.split(",")

    lines = ["# word<TAB>TAG1,TAG2,...  (first tag = default reading)"]
    for word in sorted(lex):
        lines.append(f"{word}\t{','.join(lex[word])}")
    OUT_PATH.parent.mkdir(parents=True, exist_ok=True)
    OUT_PATH.write_text("\n".join(lines) + "\n", encoding="utf-8")
    print(f"wrote {len(lex)} entries to {OUT_PATH}")


if __name__ == "__main__":
    main()
