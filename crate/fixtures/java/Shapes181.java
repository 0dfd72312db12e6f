import java.util.ArrayList;

public class Shapes181 {
    static int greatestDivisor(int a, int b) {
        while (b != 0) {
            int t = b;
            b = a % b;
            a = t;
        }
        return a;
    }

    public static double computeAverage(int[] data) {
        double sum = 0;
        for (int v : data) {
            sum = sum + v;
        }
        return sum / data.length;
    }

    static int countVowels(String input) {
        int count = 0;
        for (int idx = 0; idx < input.length(); idx++) {
            char ch = Character.toLowerCase(input.charAt(idx));
            switch (ch) {
                case 'a':
                case 'e':
                case 'i':
                case 'o':
                case 'u':
                count++;
                break;
                default:
                break;
            }
        }
        return count;
    }

    public static long fact(int x) {
        if (x <= 1) {
            return 1;
        }
        return x * fact(x - 1);
    }

    public static int find(int[] data, int key) {
        for (int idx = 0; idx < data.length; idx++) {
            if (data[idx] == key) {
                return idx;
            }
        }
        return -1;
    }

    public static void printTriangle(int rows) {
        for (int row = 1; row <= rows; row++) {
            for (int col = 0; col < row; col++) {
                System.out.print("*");
            }
            System.out.println();
        }
    }

    static ArrayList<Integer> filterEven(int[] data) {
        ArrayList<Integer> result = new ArrayList<>();
        for (int v : data) {
            if (v % 2 == 0) {
                result.add(v);
            }
        }
        return result;
    }

    static boolean divisibleByTwo(int x) {
        return x % 2 == 0;
    }

    public static int sumArray(int[] data) {
        int sum = 0;
        for (int idx = 0; idx < data.length; idx++) {
            sum += data[idx];
        }
        return sum;
    }

    public static void main(String[] args) {
        int[] numbers = {1, 4, 3, 7, 5, 7};
        System.out.println("GCD: " + greatestDivisor(87, 12));
        double avg = computeAverage(numbers);
        System.out.println("Average: " + avg);
        System.out.println(countVowels("banana"));
        System.out.println(fact(12));
        int pos = find(numbers, 1);
        System.out.println("Found at " + pos);
        printTriangle(6);
        ArrayList<Integer> even = filterEven(numbers);
        System.out.println(even.size() + " even numbers");
        if (divisibleByTwo(11)) {
            System.out.println("even");
        } else {
            System.out.println("odd");
        }
        System.out.println("Sum: " + sumArray(numbers));
    }
}
