// Copyright 2026 The ortega authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//
// Embedded copy of data/corpus.txt. Kept byte-identical to the file; the
// corpus test suite checks the two against each other.

#ifndef ORTEGA_CORPUS_DATA_HPP_
#define ORTEGA_CORPUS_DATA_HPP_

#include <string_view>

namespace ortega {

inline constexpr std::string_view kCorpusText = R"corpus(# Printed-value corpus: the 1512/1534-1542 editions table, the Chuquet root table,
# and every mediant-iteration trace table, transcribed as printed.
# Fraction syntax: "w+p/q" mixed, "p/q" pure, "k" integer; sign only leading.
# Fields are |-separated; # starts a comment line.

[editions]
# id|radicand|ed1_value|ed1_remainder|ed2_value|ed2_remainder|seeds|pub_row|opt_row|ed2_optimal
1|128|11+7/23|112/529|11+16/51|-1/2601|heron|8||yes
2|80|8+16/17|16/289|8+17/18|-1/324|heron|2||yes
3|297|17+8/35|216/1225|17+659/2820|-1/7952400|heron|14||yes
4|300|17+11/35|264/1225|17+25/78|-1/6084|heron|11||yes
5|375|19+14/39|350/1521|19+285/781|-1/609961|heron|13||yes
6|135|11+14/23|126/529|11+13/21|-1/441|heron|6||yes
7|75|8+11/17|66/289|8+103/156|-1/24336|heron|16||yes
8|756|27+27/55|756/3025|27+109/220|-1/48400|heron|30||yes
9|611|24+35/49|10/49|24+6886/9585|-1/91872225|heron|19||yes
10|231|15+6/31|150/961|15+151/760|-1/577600|heron|30||yes
11|800|28+16/57|656/3249|28+197/693|-1/480249|heron|16||yes
12|4100|64+4/129|500/16641|64+1/32|-1/1024|heron|1||yes
13|2000|44+64/89|1600/7921|44+2079/2882|-89/68644|heron|9|20|no
14|9600|97+191/195|764/38025|97+191/194|-36481/37636|heron|1|48|no
15|127+3/11|11+2/7|-51/539|11+2/7|-51/539|integer|5|46|no
16|5+1/3|2+13/42|-1/1764|2+13/42|-1/1764|integer|10||yes

[chuquet]
# n|value|stated_error|side|recomputed_error_when_erratum
2|1+169/408|1/166464|upper|
3|1+571/780|1/608400|upper|
5|2+161/682|1/465124|upper|5/465124
6|2+881/1960|1/3841600|upper|
7|2+7873/12192|1/148644864|upper|
8|2+985/1189|1/1413721|upper|
10|3+1405/8658|1/74960964|upper|
10|3+228/1405|-1/1974025|lower|
11|3+379/1197|1/1432809|upper|
12|3+181/390|1/1432809|upper|1/152100
13|3+109/180|1/32400|upper|
14|3+2667/3596|1/12931216|upper|

[trace]
radicand=128|policy=reduce|seeds=heron|stop=target:11+16/51|pub=8
1|11+7/23|11+7/22|49/484
2|11+14/45|11+7/22|49/484
3|11+21/67|11+7/22|49/484
4|11+21/67|11+28/89|161/7921
5|11+21/67|11+49/156|217/24336
6|11+21/67|11+70/223|217/49729
7|11+21/67|11+91/290|161/84100
8|11+21/67|11+16/51|1/2601

[trace]
radicand=80|policy=reduce|seeds=heron|stop=target:8+17/18|pub=2
1|8+16/17|9|1/1
2|8+16/17|8+17/18|1/324

[trace]
radicand=297|policy=reduce|seeds=heron|stop=target:17+659/2820|pub=14
1|17+8/35|17+4/17|16/289
2|17+3/13|17+4/17|16/289
3|17+7/30|17+4/17|16/289
4|17+7/30|17+11/47|27/2209
5|17+7/30|17+18/77|16/5929
6|17+25/107|17+18/77|16/5929
7|17+25/107|17+43/184|9/33856
8|17+68/291|17+43/184|9/33856
9|17+111/475|17+43/184|9/33856
10|17+154/659|17+43/184|9/33856
11|17+154/659|17+197/843|31/710649
12|17+154/659|17+351/1502|37/2256004
13|17+154/659|17+505/2161|27/4669921
14|17+154/659|17+659/2820|1/7952400

[trace]
radicand=300|policy=reduce|seeds=heron|stop=target:17+25/78|pub=11
1|17+11/35|17+11/34|121/1156
2|17+22/69|17+11/34|121/1156
3|17+33/103|17+11/34|121/1156
4|17+33/103|17+44/137|429/18769
5|17+33/103|17+77/240|649/57600
6|17+33/103|17+110/343|781/117649
7|17+33/103|17+143/446|825/198916
8|17+33/103|17+176/549|781/301401
9|17+33/103|17+209/652|649/425104
10|17+33/103|17+242/755|429/570025
11|17+33/103|17+25/78|1/6084

[trace]
radicand=375|policy=reduce|seeds=heron|stop=target:19+285/781|pub=13
1|19+14/39|19+7/19|49/361
2|19+21/58|19+7/19|49/361
3|19+4/11|19+7/19|49/361
4|19+4/11|19+11/30|61/900
5|19+4/11|19+15/41|61/1681
6|19+4/11|19+19/52|49/2704
7|19+4/11|19+23/63|25/3969
8|19+27/74|19+23/63|25/3969
9|19+27/74|19+50/137|34/18769
10|19+27/74|19+77/211|21/44521
11|19+104/285|19+77/211|21/44521
12|19+104/285|19+181/496|25/246016
13|19+104/285|19+285/781|1/609961

[trace]
radicand=135|policy=reduce|seeds=heron|stop=target:11+13/21|pub=6
1|11+14/23|11+7/11|49/121
2|11+21/34|11+7/11|49/121
3|11+21/34|11+28/45|154/2025
4|11+21/34|11+49/79|189/6241
5|11+21/34|11+70/113|154/12769
6|11+21/34|11+13/21|1/441

[trace]
radicand=75|policy=reduce|seeds=heron|stop=target:8+103/156|pub=16
1|8+11/17|8+11/16|121/256
2|8+11/17|8+2/3|1/9
3|8+13/20|8+2/3|1/9
4|8+15/23|8+2/3|1/9
5|8+17/26|8+2/3|1/9
6|8+19/29|8+2/3|1/9
7|8+21/32|8+2/3|1/9
8|8+23/35|8+2/3|1/9
9|8+25/38|8+2/3|1/9
10|8+27/41|8+2/3|1/9
11|8+29/44|8+2/3|1/9
12|8+31/47|8+2/3|1/9
13|8+33/50|8+2/3|1/9
14|8+33/50|8+35/53|6/2809
15|8+68/103|8+35/53|6/2809
16|8+68/103|8+103/156|1/24336

[trace]
radicand=756|policy=reduce|seeds=heron|stop=target:27+109/220|pub=30
1|27+27/55|27+1/2|1/4
2|27+28/57|27+1/2|1/4
3|27+29/59|27+1/2|1/4
4|27+30/61|27+1/2|1/4
5|27+31/63|27+1/2|1/4
6|27+32/65|27+1/2|1/4
7|27+33/67|27+1/2|1/4
8|27+34/69|27+1/2|1/4
9|27+35/71|27+1/2|1/4
10|27+36/73|27+1/2|1/4
11|27+37/75|27+1/2|1/4
12|27+38/77|27+1/2|1/4
13|27+39/79|27+1/2|1/4
14|27+40/81|27+1/2|1/4
15|27+41/83|27+1/2|1/4
16|27+42/85|27+1/2|1/4
17|27+43/87|27+1/2|1/4
18|27+44/89|27+1/2|1/4
19|27+45/91|27+1/2|1/4
20|27+46/93|27+1/2|1/4
21|27+47/95|27+1/2|1/4
22|27+48/97|27+1/2|1/4
23|27+49/99|27+1/2|1/4
24|27+50/101|27+1/2|1/4
25|27+51/103|27+1/2|1/4
26|27+52/105|27+1/2|1/4
27|27+53/107|27+1/2|1/4
28|27+54/109|27+1/2|1/4
29|27+54/109|27+55/111|28/12321
30|27+54/109|27+109/220|1/48400

[trace]
radicand=611|policy=reduce|seeds=heron|stop=target:24+6886/9585|pub=19
1|24+5/7|24+35/48|1225/2304
2|24+5/7|24+8/11|53/121
3|24+5/7|24+13/18|61/324
4|24+5/7|24+18/25|49/625
5|24+5/7|24+23/32|17/1024
6|24+28/39|24+23/32|17/1024
7|24+51/71|24+23/32|17/1024
8|24+51/71|24+74/103|17/10609
9|24+125/174|24+74/103|17/10609
10|24+199/277|24+74/103|17/10609
11|24+199/277|24+273/380|49/144400
12|24+199/277|24+472/657|61/431649
13|24+199/277|24+671/934|53/872356
14|24+199/277|24+870/1211|25/1466521
15|24+1069/1488|24+870/1211|25/1466521
16|24+1069/1488|24+1939/2699|14/7284601
17|24+3008/4187|24+1939/2699|14/7284601
18|24+4947/6886|24+1939/2699|14/7284601
19|24+4947/6886|24+6886/9585|1/91872225

[trace]
radicand=231|policy=reduce|seeds=heron|stop=target:15+151/760|pub=30
1|15+6/31|15+1/5|1/25
2|15+7/36|15+1/5|1/25
3|15+8/41|15+1/5|1/25
4|15+9/46|15+1/5|1/25
5|15+10/51|15+1/5|1/25
6|15+11/56|15+1/5|1/25
7|15+12/61|15+1/5|1/25
8|15+13/66|15+1/5|1/25
9|15+14/71|15+1/5|1/25
10|15+15/76|15+1/5|1/25
11|15+16/81|15+1/5|1/25
12|15+17/86|15+1/5|1/25
13|15+18/91|15+1/5|1/25
14|15+19/96|15+1/5|1/25
15|15+20/101|15+1/5|1/25
16|15+21/106|15+1/5|1/25
17|15+22/111|15+1/5|1/25
18|15+23/116|15+1/5|1/25
19|15+24/121|15+1/5|1/25
20|15+25/126|15+1/5|1/25
21|15+26/131|15+1/5|1/25
22|15+27/136|15+1/5|1/25
23|15+28/141|15+1/5|1/25
24|15+29/146|15+1/5|1/25
25|15+30/151|15+1/5|1/25
26|15+30/151|15+31/156|25/24336
27|15+30/151|15+61/307|37/94249
28|15+30/151|15+91/458|37/209764
29|15+30/151|15+121/609|25/370881
30|15+30/151|15+151/760|1/577600

[trace]
radicand=800|policy=reduce|seeds=heron|stop=target:28+197/693|pub=16
1|28+16/57|28+2/7|4/49
2|28+9/32|28+2/7|4/49
3|28+11/39|28+2/7|4/49
4|28+13/46|28+2/7|4/49
5|28+15/53|28+2/7|4/49
6|28+17/60|28+2/7|4/49
7|28+19/67|28+2/7|4/49
8|28+21/74|28+2/7|4/49
9|28+23/81|28+2/7|4/49
10|28+25/88|28+2/7|4/49
11|28+27/95|28+2/7|4/49
12|28+27/95|28+29/102|25/10404
13|28+56/197|28+29/102|25/10404
14|28+56/197|28+85/299|49/89401
15|28+56/197|28+141/496|41/246016
16|28+56/197|28+197/693|1/480249

[trace]
radicand=4100|policy=reduce|seeds=heron|stop=target:64+1/32|pub=1
1|64+4/129|64+1/32|1/1024

[trace]
radicand=2000|policy=reduce|seeds=heron|stop=optimal|pub=9|opt=20
1|44+64/89|44+8/11|64/121
2|44+18/25|44+8/11|64/121
3|44+18/25|44+13/18|25/324
4|44+31/43|44+13/18|25/324
5|44+44/61|44+13/18|25/324
6|44+44/61|44+57/79|89/6241
7|44+44/61|44+101/140|121/19600
8|44+44/61|44+145/201|121/40401
9|44+44/61|44+189/262|89/68644
10|44+44/61|44+233/323|25/104329
11|44+277/384|44+233/323|25/104329
12|44+510/707|44+233/323|25/104329
13|44+743/1030|44+233/323|25/104329
14|44+743/1030|44+976/1353|64/1830609
15|44+743/1030|44+1719/2383|41/5678689
16|44+2462/3413|44+1719/2383|41/5678689
17|44+2462/3413|44+4181/5796|25/33593616
18|44+6643/9209|44+4181/5796|25/33593616
19|44+10824/15005|44+4181/5796|25/33593616
20|44+10824/15005|44+15005/20801|1/432681601

[trace]
radicand=9600|policy=reduce|seeds=heron|stop=optimal|pub=1|opt=48
1|97+191/195|97+191/194|36481/37636
2|97+191/195|97+382/389|71625/151321
3|97+191/195|97+573/584|105241/341056
4|97+191/195|97+764/779|137329/606841
5|97+191/195|97+955/974|167889/948676
6|97+191/195|97+1146/1169|196921/1366561
7|97+191/195|97+1337/1364|224425/1860496
8|97+191/195|97+1528/1559|250401/2430481
9|97+191/195|97+1719/1754|274849/3076516
10|97+191/195|97+1910/1949|297769/3798601
11|97+191/195|97+2101/2144|319161/4596736
12|97+191/195|97+2292/2339|339025/5470921
13|97+191/195|97+2483/2534|357361/6421156
14|97+191/195|97+2674/2729|374169/7447441
15|97+191/195|97+2865/2924|389449/8549776
16|97+191/195|97+3056/3119|403201/9728161
17|97+191/195|97+3247/3314|415425/10982596
18|97+191/195|97+3438/3509|426121/12313081
19|97+191/195|97+3629/3704|435289/13719616
20|97+191/195|97+3820/3899|442929/15202201
21|97+191/195|97+4011/4094|449041/16760836
22|97+191/195|97+4202/4289|453625/18395521
23|97+191/195|97+4393/4484|456681/20106256
24|97+191/195|97+4584/4679|458209/21893041
25|97+191/195|97+4775/4874|458209/23755876
26|97+191/195|97+4966/5069|456681/25694761
27|97+191/195|97+5157/5264|453625/27709696
28|97+191/195|97+5348/5459|449041/29800681
29|97+191/195|97+5539/5654|442929/31967716
30|97+191/195|97+5730/5849|435289/34210801
31|97+191/195|97+5921/6044|426121/36529936
32|97+191/195|97+6112/6239|415425/38925121
33|97+191/195|97+6303/6434|403201/41396356
34|97+191/195|97+6494/6629|389449/43943641
35|97+191/195|97+6685/6824|374169/46566976
36|97+191/195|97+6876/7019|357361/49266361
37|97+191/195|97+7067/7214|339025/52041796
38|97+191/195|97+7258/7409|319161/54893281
39|97+191/195|97+7449/7604|297769/57820816
40|97+191/195|97+7640/7799|274849/60824401
41|97+191/195|97+7831/7994|250401/63904036
42|97+191/195|97+8022/8189|224425/67059721
43|97+191/195|97+8213/8384|196921/70291456
44|97+191/195|97+8404/8579|167889/73599241
45|97+191/195|97+8595/8774|137329/76983076
46|97+191/195|97+8786/8969|105241/80442961
47|97+191/195|97+8977/9164|71625/83978896
48|97+191/195|97+48/49|1/2401

[trace]
radicand=127+3/11|policy=reduce|seeds=integer|stop=optimal|pub=5|opt=46
1|11|12|184/11
2|11|11+1/2|219/44
3|11|11+1/3|116/99
4|11+1/4|11+1/3|116/99
5|11+1/4|11+2/7|51/539
6|11+3/11|11+2/7|51/539
7|11+5/18|11+2/7|51/539
8|11+7/25|11+2/7|51/539
9|11+9/32|11+2/7|51/539
10|11+9/32|11+11/39|200/16731
11|11+9/32|11+20/71|211/55451
12|11+9/32|11+29/103|84/116699
13|11+38/135|11+29/103|84/116699
14|11+67/238|11+29/103|84/116699
15|11+67/238|11+96/341|9/116281
16|11+163/579|11+96/341|9/116281
17|11+163/579|11+259/920|51/9310400
18|11+422/1499|11+259/920|51/9310400
19|11+681/2419|11+259/920|51/9310400
20|11+940/3339|11+259/920|51/9310400
21|11+1199/4259|11+259/920|51/9310400
22|11+1199/4259|11+1458/5179|219/295042451
23|11+1199/4259|11+2657/9438|25/89075844
24|11+1199/4259|11+3856/13697|219/2063685899
25|11+1199/4259|11+5055/17956|51/3546597296
26|11+6254/22215|11+5055/17956|51/3546597296
27|11+11309/40171|11+5055/17956|51/3546597296
28|11+16364/58127|11+5055/17956|51/3546597296
29|11+21419/76083|11+5055/17956|51/3546597296
30|11+21419/76083|11+26474/94039|9/8843333521
31|11+47893/170122|11+26474/94039|9/8843333521
32|11+47893/170122|11+74367/264161|84/767591373131
33|11+122260/434283|11+74367/264161|84/767591373131
34|11+196627/698444|11+74367/264161|84/767591373131
35|11+196627/698444|11+270994/962605|211/10192692246275
36|11+196627/698444|11+467621/1661049|200/30349921584411
37|11+196627/698444|11+664248/2359493|51/61239279387539
38|11+860875/3057937|11+664248/2359493|51/61239279387539
39|11+1525123/5417430|11+664248/2359493|51/61239279387539
40|11+2189371/7776923|11+664248/2359493|51/61239279387539
41|11+2853619/10136416|11+664248/2359493|51/61239279387539
42|11+2853619/10136416|11+3517867/12495909|116/1717625159099091
43|11+6371486/22632325|11+3517867/12495909|116/1717625159099091
44|11+6371486/22632325|11+9889353/35128234|219/13573921063546316
45|11+6371486/22632325|11+16260839/57760559|184/36699103935917291
46|11+6371486/22632325|11+22632325/80392884|1/6463015797837456

[trace]
radicand=5+1/3|policy=reduce|seeds=integer|stop=target:2+13/42|pub=10
1|2|3|11/3
2|2|2+1/2|11/12
3|2|2+1/3|1/9
4|2+1/4|2+1/3|1/9
5|2+2/7|2+1/3|1/9
6|2+3/10|2+1/3|1/9
7|2+4/13|2+1/3|1/9
8|2+4/13|2+5/16|11/768
9|2+4/13|2+9/29|11/2523
10|2+4/13|2+13/42|1/1764

[trace]
radicand=2000|policy=raw|seeds=scaled:100,5|stop=optimal|pub=48|opt=81
1|44+44/61|44+11/15|241/225
2|44+44/61|44+55/76|1201/5776
3|44+44/61|44+99/137|2129/18769
4|44+44/61|44+143/198|25/324
5|44+44/61|44+187/259|3889/67081
6|44+44/61|44+231/320|4721/102400
7|44+44/61|44+275/381|5521/145161
8|44+44/61|44+319/442|6289/195364
9|44+44/61|44+363/503|7025/253009
10|44+44/61|44+407/564|7729/318096
11|44+44/61|44+451/625|8401/390625
12|44+44/61|44+495/686|9041/470596
13|44+44/61|44+539/747|9649/558009
14|44+44/61|44+583/808|10225/652864
15|44+44/61|44+627/869|89/6241
16|44+44/61|44+671/930|11281/864900
17|44+44/61|44+715/991|11761/982081
18|44+44/61|44+759/1052|12209/1106704
19|44+44/61|44+803/1113|12625/1238769
20|44+44/61|44+847/1174|13009/1378276
21|44+44/61|44+891/1235|13361/1525225
22|44+44/61|44+935/1296|13681/1679616
23|44+44/61|44+979/1357|13969/1841449
24|44+44/61|44+1023/1418|14225/2010724
25|44+44/61|44+1067/1479|14449/2187441
26|44+44/61|44+1111/1540|121/19600
27|44+44/61|44+1155/1601|14801/2563201
28|44+44/61|44+1199/1662|14929/2762244
29|44+44/61|44+1243/1723|15025/2968729
30|44+44/61|44+1287/1784|15089/3182656
31|44+44/61|44+1331/1845|15121/3404025
32|44+44/61|44+1375/1906|15121/3632836
33|44+44/61|44+1419/1967|15089/3869089
34|44+44/61|44+1463/2028|15025/4112784
35|44+44/61|44+1507/2089|14929/4363921
36|44+44/61|44+1551/2150|14801/4622500
37|44+44/61|44+1595/2211|121/40401
38|44+44/61|44+1639/2272|14449/5161984
39|44+44/61|44+1683/2333|14225/5442889
40|44+44/61|44+1727/2394|13969/5731236
41|44+44/61|44+1771/2455|13681/6027025
42|44+44/61|44+1815/2516|13361/6330256
43|44+44/61|44+1859/2577|13009/6640929
44|44+44/61|44+1903/2638|12625/6959044
45|44+44/61|44+1947/2699|12209/7284601
46|44+44/61|44+1991/2760|11761/7617600
47|44+44/61|44+2035/2821|11281/7958041
48|44+44/61|44+2079/2882|89/68644
49|44+44/61|44+2123/2943|10225/8661249
50|44+44/61|44+2167/3004|9649/9024016
51|44+44/61|44+2211/3065|9041/9394225
52|44+44/61|44+2255/3126|8401/9771876
53|44+44/61|44+2299/3187|7729/10156969
54|44+44/61|44+2343/3248|7025/10549504
55|44+44/61|44+2387/3309|6289/10949481
56|44+44/61|44+2431/3370|5521/11356900
57|44+44/61|44+2475/3431|4721/11771761
58|44+44/61|44+2519/3492|3889/12194064
59|44+44/61|44+2563/3553|25/104329
60|44+44/61|44+2607/3614|2129/13060996
61|44+44/61|44+2651/3675|1201/13505625
62|44+44/61|44+2695/3736|241/13957696
63|44+2739/3797|44+2695/3736|241/13957696
64|44+5434/7533|44+2695/3736|241/13957696
65|44+8129/11269|44+2695/3736|241/13957696
66|44+10824/15005|44+2695/3736|241/13957696
67|44+10824/15005|44+13519/18741|1129/351225081
68|44+10824/15005|44+24343/33746|1889/1138792516
69|44+10824/15005|44+35167/48751|2521/2376660001
70|44+10824/15005|44+45991/63756|25/33593616
71|44+10824/15005|44+56815/78761|3401/6203295121
72|44+10824/15005|44+67639/93766|3649/8792062756
73|44+10824/15005|44+78463/108771|3769/11831130441
74|44+10824/15005|44+89287/123776|3761/15320498176
75|44+10824/15005|44+100111/138781|3625/19260165961
76|44+10824/15005|44+110935/153786|3361/23650133796
77|44+10824/15005|44+121759/168791|2969/28490401681
78|44+10824/15005|44+132583/183796|2449/33780969616
79|44+10824/15005|44+143407/198801|1801/39521837601
80|44+10824/15005|44+154231/213806|1025/45713005636
81|44+10824/15005|44+165055/228811|1/432681601
)corpus";

}  // namespace ortega

#endif  // ORTEGA_CORPUS_DATA_HPP_
