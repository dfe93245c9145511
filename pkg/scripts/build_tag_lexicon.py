#!/usr/bin/env python3
"""Generate the bundled word->POS lexicon shipped as kpex/data/tag_lexicon.tsv.

Expands curated high-frequency lemma lists into inflected forms (noun
plurals, verb conjugations, adjective comparatives) so the shipped file
covers 5000+ of the most frequent English word forms. Earlier sections win
on collisions: closed-class words, then adverbs, then nouns, then
adjectives, then verbs.
"""

from __future__ import annotations

from pathlib import Path

OUT = Path(__file__).resolve().parents[1] / "src" / "kpex" / "data" / "tag_lexicon.tsv"

CLOSED_CLASS = {
    # determiners / articles
    "the": "DT", "a": "DT", "an": "DT", "this": "DT", "that": "DT",
    "these": "DT", "those": "DT", "each": "DT", "every": "DT", "either": "DT",
    "neither": "DT", "some": "DT", "any": "DT", "no": "DT", "another": "DT",
    "all": "DT", "both": "DT", "such": "DT", "half": "PDT", "quite": "PDT",
    # pronouns
    "i": "PRP", "you": "PRP", "he": "PRP", "she": "PRP", "it": "PRP",
    "we": "PRP", "they": "PRP", "me": "PRP", "him": "PRP", "her": "PRP",
    "us": "PRP", "them": "PRP", "myself": "PRP", "yourself": "PRP",
    "himself": "PRP", "herself": "PRP", "itself": "PRP", "ourselves": "PRP",
    "themselves": "PRP", "oneself": "PRP", "one": "PRP", "someone": "PRP",
    "anyone": "PRP", "everyone": "PRP", "nobody": "PRP", "somebody": "PRP",
    "anybody": "PRP", "everybody": "PRP", "something": "PRP",
    "anything": "PRP", "everything": "PRP", "nothing": "PRP", "none": "PRP",
    "my": "PRP$", "your": "PRP$", "his": "PRP$", "hers": "PRP$", "its": "PRP$",
    "our": "PRP$", "their": "PRP$", "mine": "PRP$", "yours": "PRP$",
    "ours": "PRP$", "theirs": "PRP$",
    # prepositions / subordinating conjunctions
    "of": "IN", "in": "IN", "on": "IN", "at": "IN", "by": "IN", "for": "IN",
    "with": "IN", "about": "IN", "against": "IN", "between": "IN",
    "into": "IN", "through": "IN", "during": "IN", "before": "IN",
    "after": "IN", "above": "IN", "below": "IN", "from": "IN", "up": "IN",
    "down": "IN", "out": "IN", "off": "IN", "over": "IN", "under": "IN",
    "again": "RB", "further": "RB", "once": "RB", "here": "RB", "there": "EX",
    "among": "IN", "amongst": "IN", "within": "IN", "without": "IN",
    "along": "IN", "across": "IN", "behind": "IN", "beyond": "IN",
    "near": "IN", "beside": "IN", "besides": "IN", "despite": "IN",
    "except": "IN", "inside": "IN", "outside": "IN", "onto": "IN",
    "upon": "IN", "toward": "IN", "towards": "IN", "via": "IN", "per": "IN",
    "since": "IN", "until": "IN", "unless": "IN", "although": "IN",
    "though": "IN", "because": "IN", "while": "IN", "whereas": "IN",
    "whether": "IN", "if": "IN", "than": "IN", "as": "IN",
    # coordination
    "and": "CC", "or": "CC", "but": "CC", "nor": "CC", "so": "CC",
    "yet": "CC", "plus": "CC",
    # modals and auxiliaries
    "can": "MD", "could": "MD", "may": "MD", "might": "MD", "shall": "MD",
    "should": "MD", "will": "MD", "would": "MD", "must": "MD", "ought": "MD",
    "cannot": "MD",
    "be": "VB", "am": "VBP", "is": "VBZ", "are": "VBP", "was": "VBD",
    "were": "VBD", "been": "VBN", "being": "VBG",
    "have": "VBP", "has": "VBZ", "had": "VBD", "having": "VBG",
    "do": "VBP", "does": "VBZ", "did": "VBD", "done": "VBN", "doing": "VBG",
    "to": "TO", "not": "RB", "never": "RB", "nt": "RB",
    # wh-words
    "what": "WP", "who": "WP", "whom": "WP", "whose": "WP$", "which": "WDT",
    "when": "WRB", "where": "WRB", "why": "WRB", "how": "WRB",
    # numbers written out
    "zero": "CD", "two": "CD", "three": "CD", "four": "CD", "five": "CD",
    "six": "CD", "seven": "CD", "eight": "CD", "nine": "CD", "ten": "CD",
    "eleven": "CD", "twelve": "CD", "twenty": "CD", "thirty": "CD",
    "forty": "CD", "fifty": "CD", "hundred": "CD", "thousand": "CD",
    "million": "CD", "billion": "CD", "first": "JJ", "second": "JJ",
    "third": "JJ", "fourth": "JJ", "fifth": "JJ", "last": "JJ", "next": "JJ",
    # particles / interjections
    "yes": "UH", "ok": "UH", "okay": "UH", "oh": "UH", "well": "RB",
    "please": "UH", "hello": "UH", "etc": "FW",
}

ADVERBS = """
very too also just now then even still only always often sometimes usually
rarely seldom already soon later early late today tomorrow yesterday
together apart almost nearly quite rather somewhat enough indeed perhaps
maybe however therefore thus hence moreover furthermore nevertheless
nonetheless meanwhile otherwise instead anyway anywhere everywhere nowhere
somewhere abroad ahead away back forward backward upward downward inward
outward elsewhere somehow somewhat twice thrice seldom ever far further
least less more most much well better best worse worst hard fast long high
low deep wide close ago else
""".split()

IRREGULAR_PLURALS = {
    "man": "men", "woman": "women", "child": "children", "person": "people",
    "foot": "feet", "tooth": "teeth", "mouse": "mice", "goose": "geese",
    "life": "lives", "knife": "knives", "wife": "wives", "leaf": "leaves",
    "shelf": "shelves", "wolf": "wolves", "thief": "thieves", "loaf": "loaves",
    "datum": "data", "analysis": "analyses", "basis": "bases",
    "crisis": "crises", "hypothesis": "hypotheses", "thesis": "theses",
    "synthesis": "syntheses", "emphasis": "emphases", "axis": "axes",
    "criterion": "criteria", "phenomenon": "phenomena", "index": "indices",
    "matrix": "matrices", "vertex": "vertices", "appendix": "appendices",
    "medium": "media", "curriculum": "curricula", "memorandum": "memoranda",
    "radius": "radii", "nucleus": "nuclei", "stimulus": "stimuli",
    "fungus": "fungi", "alumnus": "alumni", "bacterium": "bacteria",
    "spectrum": "spectra", "quantum": "quanta", "maximum": "maxima",
    "minimum": "minima", "optimum": "optima", "fish": "fish",
    "sheep": "sheep", "deer": "deer", "species": "species",
    "series": "series", "means": "means", "corpus": "corpora",
    "schema": "schemata", "automaton": "automata", "half": "halves",
}

ES_O_NOUNS = {"potato", "tomato", "hero", "echo", "veto", "cargo", "embargo"}

NOUNS = """
time year people way day man thing woman life world hand part place case
week company system program question work government number night point
home water room mother area money story fact month lot right study book eye
job word business issue side kind head house service friend father power
hour game line end member law car city community name president team minute
idea body information parent face others level office door health person
art war history party result change morning reason research girl guy moment
air teacher force education foot boy age policy process music market sense
nation plan college interest death experience effect class control care
field development role student group country problem state family school
project model school paper method data algorithm network structure function
value analysis approach technique application theory design concept
framework knowledge language feature pattern performance test experiment
measure measurement object image text document domain task environment tool
solution strategy resource source target input output signal node graph
tree edge path search query index database table row column entry record
file format version code software hardware machine device computer memory
storage processor interface protocol server client user account session
message packet stream channel frequency wave energy matter particle atom
molecule cell tissue organ species organism gene protein acid compound
element metal material substance surface volume mass weight temperature
pressure speed velocity acceleration distance length width height depth
size shape form angle circle square triangle curve space dimension unit
scale degree ratio rate percentage fraction proportion average sum total
amount quantity probability statistic distribution sample population
variable parameter constant coefficient factor term equation formula
expression sequence set subset collection list array vector matrix domain
range limit boundary condition constraint requirement specification
property attribute characteristic quality category type classification
hierarchy relation relationship connection link association correlation
dependence difference similarity comparison contrast combination
integration separation division section segment portion piece component
module unit block layer stage phase step procedure operation action
activity behavior practice habit routine custom tradition culture society
organization institution agency department division branch committee
council board administration management leadership authority responsibility
duty obligation right privilege permission access entry exit arrival
departure journey trip travel movement motion transition transfer exchange
trade transaction purchase sale price cost expense budget fund investment
profit loss revenue income salary wage payment debt credit loan interest
account balance risk benefit advantage disadvantage opportunity threat
challenge difficulty obstacle barrier problem crisis emergency accident
incident event occasion occurrence situation circumstance context
background setting scene location position site spot region zone territory
district neighborhood town village capital station airport port harbor
road street avenue bridge tunnel railway track route direction map
landscape terrain mountain hill valley river lake sea ocean coast beach
island forest wood tree plant flower grass leaf root branch seed fruit
vegetable grain crop harvest farm field garden park soil ground earth rock
stone sand clay mineral oil gas fuel electricity power plant factory
industry production manufacturing construction building architecture
bridge tower wall roof floor ceiling window wall door gate fence yard
kitchen bathroom bedroom hall office shop store market mall restaurant
hotel hospital clinic pharmacy school university college library museum
theater cinema stadium gym church temple court prison bank post shelter
apartment flat residence address neighbor guest visitor customer client
patient doctor nurse surgeon dentist lawyer judge officer soldier police
firefighter engineer architect scientist researcher professor lecturer
instructor trainer coach player athlete artist musician singer actor
director producer writer author poet journalist editor photographer
designer developer programmer analyst consultant manager director
executive secretary assistant clerk accountant auditor economist
politician minister senator governor mayor citizen resident immigrant
refugee worker employee employer staff crew colleague partner rival support
opponent enemy ally supporter fan audience crowd public press media
newspaper magazine journal article report review summary abstract
introduction conclusion chapter paragraph sentence phrase word letter
symbol character digit figure diagram chart illustration picture photo
film video audio recording song album concert exhibition show performance
competition contest tournament match race goal score prize award medal
trophy certificate diploma license contract agreement treaty deal
negotiation discussion debate argument conversation dialogue interview
conference meeting seminar workshop lecture lesson course curriculum
subject topic theme question answer reply response feedback comment
suggestion recommendation advice instruction direction guidance order
command request demand offer proposal invitation announcement statement
declaration claim assertion hypothesis assumption premise evidence proof
demonstration example instance illustration case precedent reference
citation quotation source origin cause effect consequence outcome impact
influence implication significance importance relevance meaning
definition interpretation explanation description account narrative story
tale legend myth fiction novel poem drama comedy tragedy mystery romance
adventure fantasy history biography memoir essay thesis dissertation
learning training processing modeling computing planning meaning building
engineering programming understanding beginning ending setting writing
reading drawing painting feeling meeting hearing finding funding housing
marketing advertising mining printing publishing ranking mapping encoding
decoding embedding clustering sampling testing monitoring screening timing
spelling warning morning evening afternoon noon midnight dawn dusk season
spring summer autumn winter weather climate storm rain snow wind cloud fog
ice frost heat cold sunshine moon star planet galaxy universe sky horizon
sunrise sunset light shadow darkness color sound noise silence voice tone
accent rhythm melody harmony taste smell touch texture appearance look
glance view sight vision scene perspective outlook attitude opinion
belief faith trust doubt suspicion fear anxiety worry concern stress
pressure tension relief comfort pleasure joy happiness satisfaction
delight excitement enthusiasm passion desire wish hope dream ambition
goal objective purpose intention motive motivation incentive reward
punishment penalty fine sanction discipline rule regulation law statute
policy principle standard norm criterion guideline convention protocol
procedure process mechanism technique method approach manner mode fashion
style trend tendency pattern habit practice routine cycle rhythm sequence
series chain succession progression development growth expansion increase
decrease decline reduction drop fall rise gain improvement enhancement
upgrade innovation invention discovery creation generation formation
foundation establishment institution introduction implementation
execution operation administration maintenance repair restoration
renovation replacement substitution exchange conversion transformation
translation adaptation adjustment modification alteration revision
correction error mistake fault defect flaw bug failure success
achievement accomplishment attainment victory defeat loss damage harm
injury wound pain suffering disease illness infection virus bacteria
epidemic pandemic symptom diagnosis treatment therapy medicine drug
vaccine dose surgery operation recovery rehabilitation prevention
protection safety security defense attack assault invasion war battle
conflict fight struggle resistance rebellion revolution reform movement
campaign protest demonstration strike riot violence crime theft robbery
murder fraud corruption scandal investigation inquiry trial verdict
judgment sentence appeal justice equality freedom liberty independence
democracy republic monarchy empire kingdom state nation country border
frontier territory colony province region county municipality
metropolis suburb outskirts vicinity surroundings environment ecosystem
habitat wildlife nature conservation pollution waste recycling emission
radiation carbon oxygen hydrogen nitrogen chemistry physics biology
geology astronomy mathematics geometry algebra calculus statistics logic
philosophy psychology sociology anthropology archaeology linguistics
literature poetry grammar vocabulary translation economics finance
accounting marketing management administration politics diplomacy
strategy tactics logistics infrastructure transportation communication
telecommunication broadcast internet web site page browser email
password username login profile network platform application app
software update download upload file folder directory archive backup
cloud server database spreadsheet presentation keyboard mouse screen
monitor display printer scanner camera microphone speaker headphone
battery charger cable wire circuit chip sensor robot automation
intelligence agent model neural optimization regression prediction
classification recognition detection segmentation extraction retrieval
summarization generation evaluation validation verification benchmark
baseline metric precision recall accuracy score threshold weight bias
gradient loss epoch iteration convergence parameter hyperparameter
architecture layer neuron activation attention transformer encoder
decoder token vocabulary corpus dataset annotation label tag instance
sample batch queue stack heap pointer reference variable constant loop
recursion iteration compiler interpreter syntax semantics runtime
exception thread process scheduler kernel driver firmware
""".split()

ADJECTIVES = """
good new old great big small large long little high low young important
different early able bad best better certain clear common easy economic
federal free full general hard human international major military national
only political possible public real recent right social special strong
sure true white whole significant similar available popular basic known
various difficult entire current traditional open short personal natural
private past serious local several single simple physical legal likely
final nice particular global specific united total professional complete
necessary individual effective modern ready medical black red blue green
yellow brown gray dark bright light heavy deep wide narrow thick thin
broad tall huge tiny enormous massive vast immense dense sparse frequent
rare occasional constant continuous permanent temporary brief instant
quick rapid slow fast immediate sudden gradual steady stable unstable
secure safe dangerous risky harmful beneficial useful useless valuable
worthless expensive cheap affordable costly rich poor wealthy successful
efficient inefficient productive creative innovative original unique
standard normal unusual strange odd typical ordinary extraordinary
remarkable notable famous popular unknown obscure visible invisible
apparent obvious evident subtle hidden secret confidential sensitive
robust fragile flexible rigid solid liquid fluid smooth rough soft
elastic mechanical electrical electronic digital analog optical thermal
chemical biological nuclear solar lunar atomic molecular cellular genetic
organic inorganic synthetic artificial intelligent smart clever wise
foolish rational irrational logical reasonable unreasonable fair unfair
just unjust equal unequal balanced consistent inconsistent compatible
incompatible relevant irrelevant appropriate suitable convenient
accurate precise exact approximate rough correct incorrect wrong false
valid invalid reliable unreliable dependent independent separate joint
mutual collective cooperative competitive aggressive passive active
dynamic static mobile stationary portable remote distant close near
adjacent internal external inner outer central peripheral upper lower
top bottom front rear forward backward vertical horizontal diagonal
parallel perpendicular circular linear angular spherical cubic flat
curved straight crooked even uneven level steep shallow hollow dense
empty full vacant occupied crowded busy idle quiet loud silent noisy
calm peaceful violent gentle fierce mild severe extreme moderate
intense faint dim brilliant pale vivid colorful transparent opaque
fresh stale raw cooked ripe rotten pure impure clean dirty tidy messy
neat organized chaotic structured systematic random arbitrary optimal
minimal maximal partial complete thorough comprehensive detailed
superficial profound shallow elementary advanced sophisticated complex
complicated intricate plain fancy elegant graceful awkward clumsy
skilled talented gifted capable competent incompetent qualified
experienced novice mature immature adult juvenile senior junior elderly
ancient antique contemporary modern futuristic historic historical
cultural ethnic racial religious secular spiritual moral ethical
immoral honest dishonest loyal faithful trustworthy suspicious jealous
envious generous selfish greedy humble modest proud arrogant confident
shy timid bold brave courageous fearful anxious nervous relaxed tense
comfortable uncomfortable pleasant unpleasant enjoyable boring
interesting fascinating exciting thrilling dull tedious amusing funny
humorous witty charming attractive beautiful handsome pretty ugly
gorgeous stunning plain healthy unhealthy sick ill fit weak strong
powerful powerless feeble sturdy vigorous energetic tired exhausted
weary alert aware conscious unconscious awake asleep alive dead mortal
immortal eternal infinite finite limited unlimited restricted
unrestricted bound unbound absolute relative conditional unconditional
essential optional mandatory voluntary compulsory spontaneous deliberate
intentional accidental incidental fundamental primary secondary tertiary
principal auxiliary supplementary additional extra spare redundant
scarce abundant plentiful sufficient insufficient adequate inadequate
excessive sparse numerous countless multiple double triple quadruple
empirical theoretical practical conceptual abstract concrete tangible
intangible virtual actual potential kinetic statistical mathematical
computational algorithmic numerical analytical experimental clinical
diagnostic therapeutic preventive surgical pharmaceutical industrial
commercial residential agricultural rural urban suburban metropolitan
domestic foreign overseas continental coastal inland maritime aerial
terrestrial aquatic marine tropical polar arctic temperate arid humid
dry wet damp moist frozen boiling warm cool cold hot lukewarm
""".split()

JJR_JJS = {
    "big": ("bigger", "biggest"), "small": ("smaller", "smallest"),
    "large": ("larger", "largest"), "long": ("longer", "longest"),
    "short": ("shorter", "shortest"), "high": ("higher", "highest"),
    "low": ("lower", "lowest"), "old": ("older", "oldest"),
    "young": ("younger", "youngest"), "new": ("newer", "newest"),
    "fast": ("faster", "fastest"), "slow": ("slower", "slowest"),
    "strong": ("stronger", "strongest"), "weak": ("weaker", "weakest"),
    "early": ("earlier", "earliest"), "late": ("later", "latest"),
    "easy": ("easier", "easiest"), "hard": ("harder", "hardest"),
    "good": ("better", "best"), "bad": ("worse", "worst"),
    "great": ("greater", "greatest"), "deep": ("deeper", "deepest"),
    "wide": ("wider", "widest"), "narrow": ("narrower", "narrowest"),
    "close": ("closer", "closest"), "near": ("nearer", "nearest"),
    "simple": ("simpler", "simplest"), "clean": ("cleaner", "cleanest"),
    "rich": ("richer", "richest"), "poor": ("poorer", "poorest"),
    "cheap": ("cheaper", "cheapest"), "warm": ("warmer", "warmest"),
    "cool": ("cooler", "coolest"), "cold": ("colder", "coldest"),
    "hot": ("hotter", "hottest"), "thin": ("thinner", "thinnest"),
    "thick": ("thicker", "thickest"), "tall": ("taller", "tallest"),
    "heavy": ("heavier", "heaviest"), "light": ("lighter", "lightest"),
    "few": ("fewer", "fewest"), "tight": ("tighter", "tightest"),
    "smart": ("smarter", "smartest"), "safe": ("safer", "safest"),
}

IRREGULAR_VERBS = {
    # lemma: (past, participle)
    "say": ("said", "said"), "go": ("went", "gone"), "get": ("got", "gotten"),
    "make": ("made", "made"), "know": ("knew", "known"),
    "think": ("thought", "thought"), "take": ("took", "taken"),
    "see": ("saw", "seen"), "come": ("came", "come"),
    "find": ("found", "found"), "give": ("gave", "given"),
    "tell": ("told", "told"), "become": ("became", "become"),
    "show": ("showed", "shown"), "leave": ("left", "left"),
    "feel": ("felt", "felt"), "put": ("put", "put"),
    "bring": ("brought", "brought"), "begin": ("began", "begun"),
    "keep": ("kept", "kept"), "hold": ("held", "held"),
    "write": ("wrote", "written"), "stand": ("stood", "stood"),
    "hear": ("heard", "heard"), "let": ("let", "let"),
    "mean": ("meant", "meant"), "set": ("set", "set"),
    "meet": ("met", "met"), "run": ("ran", "run"), "pay": ("paid", "paid"),
    "sit": ("sat", "sat"), "speak": ("spoke", "spoken"),
    "lie": ("lay", "lain"), "lead": ("led", "led"), "read": ("read", "read"),
    "grow": ("grew", "grown"), "lose": ("lost", "lost"),
    "fall": ("fell", "fallen"), "send": ("sent", "sent"),
    "build": ("built", "built"), "understand": ("understood", "understood"),
    "draw": ("drew", "drawn"), "break": ("broke", "broken"),
    "spend": ("spent", "spent"), "cut": ("cut", "cut"),
    "rise": ("rose", "risen"), "drive": ("drove", "driven"),
    "buy": ("bought", "bought"), "wear": ("wore", "worn"),
    "choose": ("chose", "chosen"), "seek": ("sought", "sought"),
    "throw": ("threw", "thrown"), "catch": ("caught", "caught"),
    "deal": ("dealt", "dealt"), "win": ("won", "won"),
    "forget": ("forgot", "forgotten"), "lay": ("laid", "laid"),
    "sell": ("sold", "sold"), "fight": ("fought", "fought"),
    "bear": ("bore", "borne"), "teach": ("taught", "taught"),
    "eat": ("ate", "eaten"), "sing": ("sang", "sung"),
    "strike": ("struck", "struck"), "hang": ("hung", "hung"),
    "shake": ("shook", "shaken"), "ride": ("rode", "ridden"),
    "feed": ("fed", "fed"), "shoot": ("shot", "shot"),
    "fly": ("flew", "flown"), "sleep": ("slept", "slept"),
    "swim": ("swam", "swum"), "bind": ("bound", "bound"),
    "blow": ("blew", "blown"), "swing": ("swung", "swung"),
    "sweep": ("swept", "swept"), "bend": ("bent", "bent"),
    "dig": ("dug", "dug"), "spread": ("spread", "spread"),
    "hide": ("hid", "hidden"), "hit": ("hit", "hit"),
    "stick": ("stuck", "stuck"), "tear": ("tore", "torn"),
    "freeze": ("froze", "frozen"), "shut": ("shut", "shut"),
    "prove": ("proved", "proven"), "burst": ("burst", "burst"),
    "cast": ("cast", "cast"), "cost": ("cost", "cost"),
    "hurt": ("hurt", "hurt"), "quit": ("quit", "quit"),
    "split": ("split", "split"), "spring": ("sprang", "sprung"),
    "steal": ("stole", "stolen"), "swear": ("swore", "sworn"),
    "wake": ("woke", "woken"), "arise": ("arose", "arisen"),
    "shrink": ("shrank", "shrunk"), "undergo": ("underwent", "undergone"),
    "withdraw": ("withdrew", "withdrawn"), "light": ("lit", "lit"),
    "slide": ("slid", "slid"), "spin": ("spun", "spun"),
}

VERBS = """
ask work seem call try need want use move live believe happen include
continue change watch follow stop create open walk offer remember consider
appear serve die expect stay rise require report decide pull return explain
hope develop carry receive agree support hit produce provide talk turn
start play like love help look wait cover describe represent suggest plan
point allow add learn lose study improve increase reduce apply analyze
compare compute calculate measure estimate evaluate examine investigate
explore observe identify detect determine define derive demonstrate
establish extend express extract combine classify collect communicate
compile complete conclude conduct confirm connect construct contain
contribute convert correspond denote depend design discuss display
distinguish divide document eliminate emerge employ enable encourage
enhance ensure exist facilitate focus form formulate generate illustrate
implement imply indicate infer influence integrate interpret introduce
involve limit link list maintain manage map model modify note obtain occur
operate optimize organize perform predict prepare present preserve prevent
process propose publish record refer reflect regard relate remain remove
repeat replace resolve respond restrict result retain reveal review revise
select share simplify solve specify state store strengthen summarize
test train transform transmit treat update validate vary verify view
achieve acquire adapt adjust adopt advance affect aim announce answer
anticipate argue arrange arrive assess assign assist assume attach attack
attempt attend attract avoid base behave belong borrow capture cause
challenge check cite claim clarify click close collaborate color combine
comment commit compensate compete complain comprise concentrate concern
condition configure conform confront consist consult consume contact
contrast control cook copy correct count crash criticize cross
damage dance debate decline decrease dedicate defend delay delete deliver
demand deny depart deploy deposit derive deserve destroy differ
direct disagree disappear discover dismiss dispose distribute disturb
dominate doubt drop earn edit educate elect embed emphasize enact enclose
encounter end enforce engage enjoy enter enumerate equal escape evolve
exceed exchange exclude execute exercise exhibit expand experience expire
export expose fail fetch fill filter finish fit fix fold force forecast
found gather generalize govern grant guarantee guard guess guide handle
happen harm head heat hire host hurry ignore imagine import impose
improve incorporate injure insert insist inspect inspire install instruct
intend interact interfere interrupt interview invent invest invite
isolate issue join judge jump justify kick kill kiss knock label lack
land laugh launch lean leap lend lift listen load locate lock look loop
mark marry match matter mention merge migrate mind miss mix motivate
mount multiply name navigate negotiate nod notice notify obey object
oblige occupy order output overcome overlap overlook own pack paint
parse participate pass pause perceive permit persist persuade pick plot
possess post postpone pour practice praise pray prefer press print
proceed promise promote pronounce protect protest pump purchase pursue
push qualify question queue race rain raise rank reach react realize
recall recognize recommend reconstruct recover recruit refine refuse
register regret regulate reinforce reject relax release rely remark
remind rename render rent reorder repair request rescue research reserve
reset resign resist rest restore retrieve retry reverse reward rotate
round route rub rule rush sample satisfy save scale scan schedule scream
search seat secure seem seize sense separate serialize settle shape
shift ship shout shrug sign signal simulate skip smile smooth sort sound
spell spill stress stretch strip struggle submit subscribe substitute
succeed suffer suit supply suppose surround survive suspect suspend
switch synchronize tackle tag tend terminate thank threaten tie tokenize
touch trace track trade transfer translate transport travel trigger trim
trust try tune type undertake unify unite unload unlock upload urge
value visit vote wander warn wash waste weigh welcome whisper wish
wonder worry wrap yield zoom
""".split()


def _double_final(lemma: str) -> bool:
    if lemma in {"begin", "occur", "prefer", "refer", "commit", "admit",
                 "submit", "permit", "control", "regret", "equip", "forget",
                 "transmit", "transfer", "omit", "format", "program", "plan",
                 "stop", "drop", "trap", "wrap", "grab", "trim", "scan",
                 "ship", "skip", "slip", "trip", "chat", "map", "tag",
                 "plug", "drag", "swap", "step", "shop", "rub", "nod",
                 "pump"}:
        return True
    if len(lemma) > 4 or len(lemma) < 3:
        return False
    vowels = "aeiou"
    c, v, f = lemma[-3], lemma[-2], lemma[-1]
    return c not in vowels and v in vowels and f not in vowels + "wxy"


def pluralize(noun: str) -> str:
    if noun in IRREGULAR_PLURALS:
        return IRREGULAR_PLURALS[noun]
    if noun.endswith(("s", "x", "z", "ch", "sh")):
        return noun + "es"
    if noun.endswith("y") and len(noun) > 1 and noun[-2] not in "aeiou":
        return noun[:-1] + "ies"
    if noun.endswith("o") and noun in ES_O_NOUNS:
        return noun + "es"
    return noun + "s"


def verb_forms(lemma: str) -> dict[str, str]:
    forms: dict[str, str] = {lemma: "VB"}
    # third person singular
    if lemma.endswith(("s", "x", "z", "ch", "sh")):
        vbz = lemma + "es"
    elif lemma.endswith("y") and lemma[-2] not in "aeiou":
        vbz = lemma[:-1] + "ies"
    elif lemma.endswith("o"):
        vbz = lemma + "es"
    else:
        vbz = lemma + "s"
    forms.setdefault(vbz, "VBZ")
    # gerund
    if lemma.endswith("ie"):
        ing = lemma[:-2] + "ying"
    elif lemma.endswith("e") and not lemma.endswith(("ee", "oe", "ye")):
        ing = lemma[:-1] + "ing"
    elif _double_final(lemma):
        ing = lemma + lemma[-1] + "ing"
    else:
        ing = lemma + "ing"
    forms.setdefault(ing, "VBG")
    # past and participle
    if lemma in IRREGULAR_VERBS:
        past, part = IRREGULAR_VERBS[lemma]
    else:
        if lemma.endswith("e"):
            past = lemma + "d"
        elif lemma.endswith("y") and lemma[-2] not in "aeiou":
            past = lemma[:-1] + "ied"
        elif _double_final(lemma):
            past = lemma + lemma[-1] + "ed"
        else:
            past = lemma + "ed"
        part = past
    forms.setdefault(past, "VBD")
    forms.setdefault(part, "VBN")
    return forms


def build() -> dict[str, str]:
    lexicon: dict[str, str] = {}

    def put(word: str, tag: str) -> None:
        lexicon.setdefault(word, tag)

    for word, tag in CLOSED_CLASS.items():
        put(word, tag)
    for word in ADVERBS:
        put(word, "RB")
    for noun in NOUNS:
        put(noun, "NN")
        put(pluralize(noun), "NNS")
    for adj in ADJECTIVES:
        put(adj, "JJ")
    for adj, (jjr, jjs) in JJR_JJS.items():
        put(adj, "JJ")
        put(jjr, "JJR")
        put(jjs, "JJS")
    for lemma in VERBS + list(IRREGULAR_VERBS):
        for form, tag in verb_forms(lemma).items():
            put(form, tag)
    return lexicon


def main() -> None:
    lexicon = build()
    OUT.parent.mkdir(parents=True, exist_ok=True)
    with OUT.open("w", encoding="utf-8") as f:
        for word in sorted(lexicon):
            f.write(f"{word}\t{lexicon[word]}\n")
    print(f"wrote {len(lexicon)} entries to {OUT}")


if __name__ == "__main__":
    main()
