public class Counter154 {
    static class Point {
        int x;
        int y;
        Point(int x, int y) {
            this.x = x;
            this.y = y;
        }
        double distance() {
            return Math.sqrt(x * x + y * y);
        }
    }

    public static String reverse(String word) {
        StringBuilder sb = new StringBuilder();
        for (int idx = word.length() - 1; idx >= 0; idx--) {
            sb.append(word.charAt(idx));
        }
        return sb.toString();
    }

    public static void pattern(int rows) {
        for (int row = 1; row <= rows; row++) {
            for (int col = 0; col < row; col++) {
                System.out.print("*");
            }
            System.out.println();
        }
    }

    public static void main(String[] args) {
        Point p = new Point(8, 7);
        System.out.println(p.distance());
        String rev = reverse("java");
        System.out.println(rev);
        pattern(4);
    }
}
