import java.util.Random;

public class Matrix177 {
    public static void printTriangle(int height) {
        for (int row = 1; row <= height; row++) {
            for (int col = 0; col < row; col++) {
                System.out.print("*");
            }
            System.out.println();
        }
    }

    static boolean divisibleByTwo(int x) {
        return x % 2 == 0;
    }

    static int[] randomFill(int size) {
        Random rand = new Random(42);
        int[] data = new int[size];
        for (int i = 0; i < size; i++) {
            data[i] = rand.nextInt(100);
        }
        return data;
    }

    public static long factorial(int x) {
        if (x <= 1) {
            return 1;
        }
        return x * factorial(x - 1);
    }

    public static boolean palindrome(String input) {
        int left = 0;
        int right = input.length() - 1;
        while (left < right) {
            if (input.charAt(left) != input.charAt(right)) {
                return false;
            }
            left++;
            right--;
        }
        return true;
    }

    static int countVowels(String input) {
        int found = 0;
        for (int i = 0; i < input.length(); i++) {
            char ch = Character.toLowerCase(input.charAt(i));
            switch (ch) {
                case 'a':
                case 'e':
                case 'i':
                case 'o':
                case 'u':
                found++;
                break;
                default:
                break;
            }
        }
        return found;
    }

    public static void main(String[] args) {
        printTriangle(5);
        if (divisibleByTwo(13)) {
            System.out.println("even");
        } else {
            System.out.println("odd");
        }
        int[] random = randomFill(8);
        System.out.println(random.length);
        System.out.println(factorial(8));
        System.out.println(palindrome("racecar"));
        System.out.println(countVowels("programming"));
    }
}
